#include "barenblatt/fractional.hpp"

#include "barenblatt/errors.hpp"
#include "barenblatt/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace barenblatt {

double rl_power_rule(double exp_beta, double nu, double t) {
    if (!(exp_beta > -1.0)) throw DomainError("rl_power_rule: requires beta > -1");
    if (!(nu > 0.0)) throw DomainError("rl_power_rule: requires nu > 0");
    if (!(t > 0.0)) throw DomainError("rl_power_rule: requires t > 0");
    const double z = 1.0 + exp_beta - nu;
    if (z <= 0.0 && z == std::floor(z)) {
        throw PoleError("rl_power_rule: Gamma(1 + beta - nu) has a pole at " + std::to_string(z));
    }
    const SignedLogGamma den = ln_gamma_signed(z);
    return den.sign * std::exp(ln_gamma(1.0 + exp_beta) - den.log_abs) * std::pow(t, exp_beta - nu);
}

void RLGrid::validate() const {
    if (!(nu > 0.0 && nu < 1.0)) throw DomainError("RLGrid: requires 0 < nu < 1");
    if (!(t_min > 0.0)) throw DomainError("RLGrid: requires t_min > 0");
    if (!(t_max >= t_min)) throw DomainError("RLGrid: requires t_max >= t_min");
    if (n_steps < 1) throw DomainError("RLGrid: requires n_steps >= 1");
}

double rl_derivative_numeric(const std::function<double(double)>& f, const RLGrid& grid,
                             double t) {
    grid.validate();
    const double h = grid.step();
    const double kf = t / h;
    const double k = std::round(kf);
    if (std::fabs(kf - k) > 1e-9 * std::max(1.0, k) || t < grid.t_min * (1.0 - 1e-12) ||
        t > grid.t_max * (1.0 + 1e-12)) {
        throw GridError("rl_derivative_numeric: t = " + std::to_string(t) +
                        " is not a grid node in [t_min, t_max]");
    }
    const long n = static_cast<long>(k);
    double w = 1.0;
    double sum = f(n * h);
    for (long j = 1; j <= n; ++j) {
        w *= 1.0 - (grid.nu + 1.0) / j;
        sum += w * f((n - j) * h);
    }
    if (!std::isfinite(sum)) throw DomainError("rl_derivative_numeric: f is not finite on [0, t]");
    return sum * std::pow(h, -grid.nu);
}

double fractional_solution(const FractionalParams& fp, double x, double t) {
    if (!(t > 0.0)) throw DomainError("fractional_solution: requires t > 0");
    const double shape = 1.0 - (fp.C2 / fp.C1) * x * x / std::pow(t, 2.0 * fp.nu);
    if (shape <= 0.0) return 0.0;
    return fp.C1 / std::pow(t, fp.nu) * shape;
}

double fbe_residual(const FractionalParams& fp, double x, double t) {
    if (!(t > 0.0)) throw DomainError("fbe_residual: requires t > 0");
    const double nu = fp.nu;
    const double d_nu = fp.C1 * rl_power_rule(-nu, nu, t) -
                        fp.C2 * x * x * rl_power_rule(-3.0 * nu, nu, t);
    const double t3 = std::pow(t, -3.0 * nu);
    const double u_xx = -2.0 * fp.C2 * t3;
    const double u_x = -2.0 * fp.C2 * x * t3;
    return std::pow(t, -2.0 * nu) * d_nu + std::pow(t, -nu) * u_xx + u_x * u_x;
}

} // namespace barenblatt
