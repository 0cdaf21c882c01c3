#include "barenblatt/presets.hpp"

#include "barenblatt/errors.hpp"
#include "barenblatt/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

namespace barenblatt {

namespace {

constexpr double kPleGammaWarn = 25.0;

void require_dim(int d) {
    if (d < 1) throw DomainError("preset: d must be >= 1, got " + std::to_string(d));
}

} // namespace

std::pair<PLEParams, FamilyParams> ple_preset(double p, int d) {
    if (!(p > 2.0) || !std::isfinite(p)) {
        throw DomainError("ple_preset: requires p > 2, got " + std::to_string(p));
    }
    require_dim(d);
    PLEParams out;
    out.p = p;
    out.d = d;
    out.k = 1.0 / (p - 2.0 + p / d);
    out.q = ((p - 2.0) / p) * std::pow(out.k / d, 1.0 / (p - 1.0));
    const double beta = p / (p - 1.0);
    const double gamma = (p - 1.0) / (p - 2.0);
    const double alpha = out.k / d;
    const double db = d / beta;
    const double ln_frak = (std::log(beta) + db * std::log(out.q) - ln_sphere_surface(d) -
                            ln_beta(db, gamma + 1.0)) /
                           (gamma + db);
    out.frak_c = std::exp(ln_frak);
    out.C = std::exp(gamma * ln_frak);
    out.c = std::exp((ln_frak - std::log(out.q)) / beta);
    if (gamma > kPleGammaWarn) {
        out.warning = "p close to 2: gamma = " + std::to_string(gamma) +
                      " makes the profile nearly degenerate";
    }
    return {out, FamilyParams(alpha, beta, gamma, out.c, d)};
}

std::pair<NPMEParams, FamilyParams> npme_preset(double m, double nu, int d) {
    if (!(m > 1.0) || !std::isfinite(m)) throw DomainError("npme_preset: requires m > 1");
    if (!(nu > 0.0 && nu <= 2.0)) throw DomainError("npme_preset: requires 0 < nu <= 2");
    require_dim(d);
    NPMEParams out;
    out.m = m;
    out.nu = nu;
    out.d = d;
    const double denom = d * (m - 1.0) + nu;
    out.alpha = 1.0 / denom;
    out.k = std::exp(std::log(static_cast<double>(d)) + ln_gamma(0.5 * d) - std::log(denom) -
                     nu * std::numbers::ln2 - ln_gamma(1.0 + 0.5 * nu) -
                     ln_gamma(0.5 * (d + nu)));
    out.gamma = nu / (2.0 * (m - 1.0));
    out.c = std::pow(out.k, -1.0 / nu);
    out.c_literal = std::pow(out.k, -2.0 / nu);
    out.C_printed =
        std::exp(ln_gamma(0.5 * d + out.gamma + 1.0) + (d / nu) * std::log(out.k) -
                 0.5 * d * std::log(std::numbers::pi) - ln_gamma(out.gamma + 1.0));
    FamilyParams fam(out.alpha, 2.0, out.gamma, out.c, d);
    out.C_normalized = fam.norm_c();
    out.C_discrepancy = (out.C_printed - out.C_normalized) / out.C_normalized;
    out.mass_residual_c = out.C_printed / FamilyParams::normalization(2.0, out.gamma, out.c, d) - 1.0;
    out.mass_residual_c_literal =
        out.C_printed / FamilyParams::normalization(2.0, out.gamma, out.c_literal, d) - 1.0;
    return {out, fam};
}

std::pair<EPDParams, FamilyParams> epd_preset(double nu, double c, int d) {
    if (!(nu > 1.0) || !std::isfinite(nu)) {
        throw DomainError("epd_preset: requires nu > 1 (gamma = nu - 1 > 0), got " +
                          std::to_string(nu));
    }
    if (!(c > 0.0)) throw DomainError("epd_preset: requires c > 0");
    require_dim(d);
    EPDParams out;
    out.nu = nu;
    out.c = c;
    out.d = d;
    out.C_closed_form = std::exp(ln_gamma(nu + 0.5 * d) - 0.5 * d * std::log(std::numbers::pi) -
                                 ln_gamma(nu) - d * std::log(c));
    FamilyParams fam(1.0, 2.0, nu - 1.0, c, d);
    out.C_family = fam.norm_c();
    out.C_rel_discrepancy = (out.C_family - out.C_closed_form) / out.C_closed_form;
    return {out, fam};
}

FamilyParams wigner_preset() { return FamilyParams(0.5, 2.0, 0.5, 2.0, 1); }

std::uint64_t catalan(int m) {
    if (m < 0) throw DomainError("catalan: requires m >= 0");
    // C_j = C_{j-1} * 2(2j - 1) / (j + 1); after cancelling the gcd the
    // division is exact, so only the multiplication can overflow.
    std::uint64_t value = 1;
    for (int j = 1; j <= m; ++j) {
        std::uint64_t num = 2u * (2u * static_cast<std::uint64_t>(j) - 1u);
        std::uint64_t den = static_cast<std::uint64_t>(j) + 1u;
        const std::uint64_t g = std::gcd(num, den);
        num /= g;
        den /= g;
        value /= den;
        if (value > std::numeric_limits<std::uint64_t>::max() / num) {
            throw DomainError("catalan: C_" + std::to_string(m) + " overflows 64 bits");
        }
        value *= num;
    }
    return value;
}

FractionalParams fractional_preset(double nu) {
    if (!(nu > 0.0 && nu < 1.0 / 3.0)) {
        throw DomainError("fractional_preset: requires 0 < nu < 1/3, got " + std::to_string(nu));
    }
    if (nu == 0.25) throw DomainError("fractional_preset: nu = 1/4 is excluded");
    const SignedLogGamma g4 = ln_gamma_signed(1.0 - 4.0 * nu);
    const double l3 = ln_gamma(1.0 - 3.0 * nu);
    const double l2 = ln_gamma(1.0 - 2.0 * nu);
    const double l1 = ln_gamma(1.0 - nu);
    FractionalParams out;
    out.nu = nu;
    out.C1 = g4.sign * 0.5 * std::exp(l3 + l2 - g4.log_abs - l1);
    out.C2 = g4.sign * 0.25 * std::exp(l3 - g4.log_abs);
    return out;
}

} // namespace barenblatt
