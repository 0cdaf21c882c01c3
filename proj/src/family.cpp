#include "barenblatt/family.hpp"

#include "barenblatt/errors.hpp"
#include "barenblatt/specfun.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace barenblatt {

namespace {

void require_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw DomainError(std::string("FamilyParams: ") + name + " must be a finite value > 0, got " +
                          std::to_string(v));
    }
}

void require_time(double t) {
    if (!(t > 0.0) || !std::isfinite(t)) {
        throw DomainError("time must be > 0, got " + std::to_string(t));
    }
}

void require_1d(const FamilyParams& p, const char* what) {
    if (p.dim() != 1) {
        throw DimensionError(std::string(what) + ": defined for d = 1 only, got d = " +
                             std::to_string(p.dim()));
    }
}

double log_normalization(double beta, double gamma, double c, int d) {
    return std::log(beta) - d * std::log(c) - ln_sphere_surface(d) -
           ln_beta(d / beta, gamma + 1.0);
}

// (1 - s^beta)^gamma for s = r / R in [0, 1), zero from s = 1 on.
double profile(double s, double beta, double gamma) {
    if (s >= 1.0) return 0.0;
    const double base = (s == 0.0) ? 1.0 : -std::expm1(beta * std::log(s));
    return std::pow(base, gamma);
}

} // namespace

FamilyParams::FamilyParams(double alpha, double beta_exp, double gamma_exp, double c, int d)
    : alpha_(alpha), beta_(beta_exp), gamma_(gamma_exp), c_(c), d_(d) {
    require_positive(alpha, "alpha");
    require_positive(beta_exp, "beta");
    require_positive(gamma_exp, "gamma");
    require_positive(c, "c");
    if (d < 1) throw DomainError("FamilyParams: d must be >= 1, got " + std::to_string(d));
    log_norm_c_ = log_normalization(beta_, gamma_, c_, d_);
    norm_c_ = std::exp(log_norm_c_);
}

double FamilyParams::normalization(double beta_exp, double gamma_exp, double c, int d) {
    return beta_exp / (std::pow(c, d) * sphere_surface(d) * beta_fn(d / beta_exp, gamma_exp + 1.0));
}

FamilyParams make_family(double alpha, double beta_exp, double gamma_exp, double c, int d) {
    return FamilyParams(alpha, beta_exp, gamma_exp, c, d);
}

double support_radius(const FamilyParams& p, double t) {
    require_time(t);
    return p.c() * std::pow(t, p.alpha());
}

double pdf_at_radius(const FamilyParams& p, double r, double t) {
    const double radius = support_radius(p, t);
    r = std::fabs(r);
    if (r >= radius) return 0.0;
    const double amp = std::exp(p.log_norm_c() - p.alpha() * p.dim() * std::log(t));
    return amp * profile(r / radius, p.beta_exp(), p.gamma_exp());
}

double pdf(const FamilyParams& p, std::span<const double> x, double t) {
    if (static_cast<int>(x.size()) != p.dim()) {
        throw DimensionError("pdf: point has " + std::to_string(x.size()) +
                             " coordinates, family has d = " + std::to_string(p.dim()));
    }
    double ss = 0.0;
    for (double v : x) ss += v * v;
    return pdf_at_radius(p, std::sqrt(ss), t);
}

double radial_pdf(const FamilyParams& p, double r, double t) {
    if (r < 0.0) return 0.0;
    const double u = pdf_at_radius(p, r, t);
    if (u == 0.0) return 0.0;
    if (p.dim() == 1) return 2.0 * u;
    return sphere_surface(p.dim()) * std::pow(r, p.dim() - 1) * u;
}

double ball_probability(const FamilyParams& p, double a, double t) {
    const double radius = support_radius(p, t);
    if (a <= 0.0) return 0.0;
    if (a >= radius) return 1.0;
    const double y = std::pow(a / radius, p.beta_exp());
    return reg_inc_beta(y, p.dim() / p.beta_exp(), p.gamma_exp() + 1.0);
}

double cdf_1d(const FamilyParams& p, double x, double t) {
    require_1d(p, "cdf_1d");
    const double radius = support_radius(p, t);
    if (x <= -radius) return 0.0;
    if (x >= radius) return 1.0;
    if (x == 0.0) return 0.5;
    const double y = std::pow(std::fabs(x) / radius, p.beta_exp());
    const double half_mass = 0.5 * reg_inc_beta(y, 1.0 / p.beta_exp(), p.gamma_exp() + 1.0);
    return x > 0.0 ? 0.5 + half_mass : 0.5 - half_mass;
}

double cdf_1d_unpowered(const FamilyParams& p, double x, double t) {
    require_1d(p, "cdf_1d_unpowered");
    const double radius = support_radius(p, t);
    if (x <= -radius) return 0.0;
    if (x >= radius) return 1.0;
    const double y = std::fabs(x) / radius;
    const double half_mass = 0.5 * reg_inc_beta(y, 1.0 / p.beta_exp(), p.gamma_exp() + 1.0);
    return x >= 0.0 ? 0.5 + half_mass : 0.5 - half_mass;
}

double quantile_1d(const FamilyParams& p, double q, double t) {
    require_1d(p, "quantile_1d");
    if (!(q >= 0.0 && q <= 1.0)) throw DomainError("quantile_1d: requires 0 <= q <= 1");
    const double radius = support_radius(p, t);
    if (q == 0.5) return 0.0;
    if (q == 0.0) return -radius;
    if (q == 1.0) return radius;
    const double s = std::fabs(2.0 * q - 1.0);
    const double y = inv_reg_inc_beta(s, 1.0 / p.beta_exp(), p.gamma_exp() + 1.0);
    const double mag = radius * std::pow(y, 1.0 / p.beta_exp());
    return q > 0.5 ? mag : -mag;
}

double radial_moment(const FamilyParams& p, double k, double t) {
    require_time(t);
    if (!(k >= 0.0)) throw DomainError("radial_moment: requires k >= 0");
    if (k == 0.0) return 1.0;
    const double a = p.dim() / p.beta_exp();
    const double ak = (p.dim() + k) / p.beta_exp();
    const double g1 = p.gamma_exp() + 1.0;
    // B(ak, g1) / B(a, g1) = [Gamma(ak)/Gamma(a)] [Gamma(a + g1)/Gamma(ak + g1)]
    const double ratio = gamma_ratio(ak, a) * gamma_ratio(a + g1, ak + g1);
    return std::pow(p.c(), k) * ratio * std::pow(t, p.alpha() * k);
}

double self_similarity_residual(const FamilyParams& p, std::span<const double> x, double t,
                                double L) {
    require_time(t);
    if (!(L > 0.0)) throw DomainError("self_similarity_residual: requires L > 0");
    std::vector<double> scaled(x.begin(), x.end());
    const double la = std::pow(L, p.alpha());
    for (double& v : scaled) v *= la;
    return pdf(p, x, t) - std::pow(L, p.dim() * p.alpha()) * pdf(p, scaled, L * t);
}

double total_mass(const FamilyParams& p, double t, const QuadratureConfig& cfg) {
    const double radius = support_radius(p, t);
    return integrate([&](double r) { return radial_pdf(p, r, t); }, 0.0, radius, cfg);
}

} // namespace barenblatt
