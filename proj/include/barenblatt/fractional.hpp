#ifndef BARENBLATT_FRACTIONAL_HPP
#define BARENBLATT_FRACTIONAL_HPP

#include "barenblatt/presets.hpp"

#include <functional>

namespace barenblatt {

/// Riemann-Liouville derivative of t^beta:
/// Gamma(1 + beta) / Gamma(1 + beta - nu) t^(beta - nu).
/// Throws PoleError when 1 + beta - nu is a nonpositive integer, which is
/// where the reciprocal Gamma vanishes.
double rl_power_rule(double exp_beta, double nu, double t);

/// Uniform grid t_k = k h, h = t_max / n_steps, on which the numerical
/// derivative is evaluated at points t_k >= t_min.
struct RLGrid {
    double t_min = 0.0;
    double t_max = 1.0;
    int n_steps = 1;
    double nu = 0.5;

    double step() const { return t_max / n_steps; }
    void validate() const;
};

/// Grunwald-Letnikov approximation
///     D^nu f(t) ~ h^(-nu) sum_{j=0}^{n} w_j f(t - j h),  n = t / h,
/// with w_0 = 1, w_j = w_{j-1} (1 - (nu + 1)/j). First order in h for
/// functions with finite f(0). Throws GridError when t is not a grid node
/// in [t_min, t_max].
double rl_derivative_numeric(const std::function<double(double)>& f, const RLGrid& grid,
                             double t);

/// (C1 / t^nu)(1 - (C2/C1) x^2 / t^(2 nu))_+. Not a probability density.
double fractional_solution(const FractionalParams& fp, double x, double t);

/// t^(-2nu) D_t^nu u + t^(-nu) u_xx + (u_x)^2 with u = C1 t^(-nu) - C2 x^2 t^(-3nu)
/// taken as a global polynomial in x; D_t^nu is applied term by term
/// through rl_power_rule.
double fbe_residual(const FractionalParams& fp, double x, double t);

} // namespace barenblatt

#endif // BARENBLATT_FRACTIONAL_HPP
