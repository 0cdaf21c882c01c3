#ifndef BARENBLATT_SPECFUN_HPP
#define BARENBLATT_SPECFUN_HPP

// Special functions used throughout the library. Everything here is pure and
// re-entrant.

namespace barenblatt {

/// ln Gamma(x) for x > 0 (Lanczos approximation, g = 671/128, 14 terms).
double ln_gamma(double x);

/// log|Gamma(x)| together with the sign of Gamma(x), for any real x that is
/// not a pole. Negative arguments go through the reflection formula.
struct SignedLogGamma {
    double log_abs;
    int sign;
};
SignedLogGamma ln_gamma_signed(double x);

/// Gamma(num) / Gamma(den) for positive arguments. When the arguments differ
/// by a small integer the ratio is formed as an exact rising product, so
/// e.g. Gamma(1.5)/Gamma(0.5) is exactly 0.5.
double gamma_ratio(double num, double den);

double ln_beta(double a, double b);
double beta_fn(double a, double b);

/// Regularised incomplete beta I_x(a, b) = B(x; a, b) / B(a, b).
double reg_inc_beta(double x, double a, double b);

/// x in [0, 1] with I_x(a, b) = p. Safeguarded Newton on a shrinking bracket,
/// finished by picking the best of x and its two floating-point neighbours.
/// When b < 1 and p is close to 1 the root crowds against x = 1 and the
/// residual is limited by the spacing of doubles there, not by the iteration.
double inv_reg_inc_beta(double p, double a, double b);

/// Density of Beta(a, b) at x in (0, 1).
double beta_pdf(double x, double a, double b);

/// Bessel function of the first kind J_mu(x), mu >= 0, x >= 0.
///
/// Three regimes, switched on x:
///   x <= kBesselSeriesMax                 ascending power series
///   kBesselSeriesMax < x < asymptotic cut Miller backward recurrence,
///                                         normalised by the Neumann sum
///   x >= max(kBesselAsymptoticMin, 2 mu^2) Hankel asymptotic expansion
/// Adjacent regimes agree to better than 1e-12 at the switch points.
double bessel_j(double mu, double x);

/// Gamma(mu + 1) (2/x)^mu J_mu(x), which tends to 1 as x -> 0. This is the
/// radial characteristic function of the uniform law on a sphere.
double bessel_j_normalized(double mu, double x);

inline constexpr double kBesselSeriesMax = 10.0;
inline constexpr double kBesselAsymptoticMin = 35.0;

namespace detail {
// Individual branches, exposed so the overlap windows can be tested.
double bessel_j_series(double mu, double x);
double bessel_j_recurrence(double mu, double x);
double bessel_j_asymptotic(double mu, double x);
double sin_pi(double x);
} // namespace detail

/// Surface area of the unit sphere S^{d-1} in R^d: 2 pi^{d/2} / Gamma(d/2).
double sphere_surface(int d);
double ln_sphere_surface(int d);

} // namespace barenblatt

#endif // BARENBLATT_SPECFUN_HPP
