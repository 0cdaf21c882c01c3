#ifndef BARENBLATT_QUADRATURE_HPP
#define BARENBLATT_QUADRATURE_HPP

#include <functional>

namespace barenblatt {

/// Tolerances for every numerical integral in the library. An integral is
/// accepted once its estimated error is below max(abs_tol, rel_tol * |I|).
struct QuadratureConfig {
    double abs_tol = 1e-13;
    double rel_tol = 1e-12;
    int max_subdivisions = 4000;

    void validate() const;
};

struct QuadratureResult {
    double value = 0.0;
    double abs_error = 0.0;
    int subdivisions = 0;
    bool converged = false;
};

using Integrand = std::function<double(double)>;

/// Adaptive 7/15-point Gauss-Kronrod quadrature with global bisection of the
/// worst interval. The interval is first mapped through the cubic
/// x = a + (b - a) u^2 (3 - 2u), which squares the distance to both endpoints.
/// Integrable endpoint behaviour (b - x)^g is thereby turned into
/// (1 - u)^(2g + 1), so inverse-square-root singularities become bounded and
/// milder ones smooth. Stronger singularities need integrate_weighted.
QuadratureResult integrate_checked(const Integrand& f, double a, double b,
                                   const QuadratureConfig& cfg = {});

/// As integrate_checked but throws ConvergenceError when the tolerance is
/// not met within cfg.max_subdivisions.
double integrate(const Integrand& f, double a, double b, const QuadratureConfig& cfg = {});

/// Exponents of algebraic endpoint weights, both > -1.
struct EndpointExponents {
    double left = 0.0;
    double right = 0.0;
};

/// Integral of (x - a)^left (b - x)^right g(x) over [a, b] for smooth g.
/// Each half of the interval is integrated in the variable
/// s = ((x - a) / (m - a))^(left + 1) (and its mirror on the right), which
/// absorbs the weight exactly; g is therefore never multiplied by an
/// unbounded factor.
double integrate_weighted(const Integrand& g, double a, double b, EndpointExponents w,
                          const QuadratureConfig& cfg = {});

/// Splits [a, b] into equal panels no wider than max_panel and integrates
/// each adaptively. Used for oscillatory integrands, where max_panel is tied
/// to half the oscillation period.
double integrate_panels(const Integrand& f, double a, double b, double max_panel,
                        const QuadratureConfig& cfg = {});

} // namespace barenblatt

#endif // BARENBLATT_QUADRATURE_HPP
