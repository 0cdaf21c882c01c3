#ifndef BARENBLATT_PRESETS_HPP
#define BARENBLATT_PRESETS_HPP

#include "barenblatt/family.hpp"

#include <cstdint>
#include <string>
#include <utility>

namespace barenblatt {

/// p-Laplacian u_t = div(|grad u|^(p-2) grad u), p > 2.
///
/// The fundamental solution is t^(-k) (frak_c - q |x/t^(k/d)|^(p/(p-1)))_+^((p-1)/(p-2))
/// with k = 1/(p - 2 + p/d) and q = ((p-2)/p)(k/d)^(1/(p-1)). Writing it in
/// family form gives beta = p/(p-1), gamma = (p-1)/(p-2), alpha = k/d and
///     C = frak_c^gamma,   c = (frak_c / q)^(1/beta).
/// Inserting both into C = beta / (c^d |S^{d-1}| B(d/beta, gamma+1)) leaves
/// one linear equation in ln frak_c:
///     (gamma + d/beta) ln frak_c
///         = ln beta + (d/beta) ln q - ln |S^{d-1}| - ln B(d/beta, gamma+1).
struct PLEParams {
    double p = 0.0;
    int d = 0;
    double k = 0.0;
    double q = 0.0;
    double frak_c = 0.0;
    double C = 0.0;
    double c = 0.0;
    /// Non-empty when gamma is so large that the profile is numerically
    /// close to a Gaussian and the support assumption is fragile.
    std::string warning;
};

/// Nonlocal porous medium u_t = div(|u| grad^(nu-1)(|u|^(m-2) u)), nu in (0, 2].
/// For nu = 2 this is u_t = ((m-1)/m) Delta(u^m) on nonnegative u.
struct NPMEParams {
    double m = 0.0;
    double nu = 0.0;
    int d = 0;
    double alpha = 0.0;
    double k = 0.0;
    double gamma = 0.0;
    /// k^(-1/nu), the value that matches the solution term by term.
    double c = 0.0;
    /// k^(-2/nu), the alternative reading of the scale constant.
    double c_literal = 0.0;
    /// Gamma(d/2 + gamma + 1) k^(d/nu) / (pi^(d/2) Gamma(gamma + 1)).
    double C_printed = 0.0;
    /// Unit-mass constant of the mapped family.
    double C_normalized = 0.0;
    /// (C_printed - C_normalized) / C_normalized.
    double C_discrepancy = 0.0;
    /// Mass minus one of C_printed (1 - |x|^2/c^2)^gamma for each c candidate.
    double mass_residual_c = 0.0;
    double mass_residual_c_literal = 0.0;
};

/// Euler-Poisson-Darboux u_tt + ((d + 2 nu - 1)/t) u_t = c^2 Delta u, nu > 1.
struct EPDParams {
    double nu = 0.0;
    double c = 0.0;
    int d = 0;
    /// Gamma(nu + d/2) / (pi^(d/2) Gamma(nu) c^d).
    double C_closed_form = 0.0;
    double C_family = 0.0;
    double C_rel_discrepancy = 0.0;
};

/// Constants of the explicit solution of the time-fractional equation
///   t^(-2nu) D_t^nu u + t^(-nu) u_xx + (u_x)^2 = 0.
/// C1 and C2 share the sign of Gamma(1 - 4 nu): positive for nu < 1/4,
/// negative for 1/4 < nu < 1/3.
struct FractionalParams {
    double nu = 0.0;
    double C1 = 0.0;
    double C2 = 0.0;
};

std::pair<PLEParams, FamilyParams> ple_preset(double p, int d);
std::pair<NPMEParams, FamilyParams> npme_preset(double m, double nu, int d);
std::pair<EPDParams, FamilyParams> epd_preset(double nu, double c, int d);

/// d = 1, alpha = 1/2, beta = 2, gamma = 1/2, c = 2.
FamilyParams wigner_preset();

/// binom(2m, m) / (m + 1). Throws DomainError when the value does not fit in
/// 64 bits (m > 36).
std::uint64_t catalan(int m);

FractionalParams fractional_preset(double nu);

} // namespace barenblatt

#endif // BARENBLATT_PRESETS_HPP
