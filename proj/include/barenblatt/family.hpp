#ifndef BARENBLATT_FAMILY_HPP
#define BARENBLATT_FAMILY_HPP

#include "barenblatt/quadrature.hpp"

#include <span>

namespace barenblatt {

/// Parameters of the compactly supported self-similar density
///
///     u(x, t) = C t^(-alpha d) (1 - (|x| / (c t^alpha))^beta)_+^gamma,
///
/// with C = beta / (c^d |S^{d-1}| B(d/beta, gamma + 1)) fixing unit mass.
/// Validated once at construction; immutable afterwards.
class FamilyParams {
public:
    FamilyParams(double alpha, double beta_exp, double gamma_exp, double c, int d);

    double alpha() const { return alpha_; }
    double beta_exp() const { return beta_; }
    double gamma_exp() const { return gamma_; }
    double c() const { return c_; }
    int dim() const { return d_; }
    double norm_c() const { return norm_c_; }
    double log_norm_c() const { return log_norm_c_; }

    /// Recomputes C from scratch, for the construction invariant.
    static double normalization(double beta_exp, double gamma_exp, double c, int d);

private:
    double alpha_;
    double beta_;
    double gamma_;
    double c_;
    int d_;
    double log_norm_c_;
    double norm_c_;
};

FamilyParams make_family(double alpha, double beta_exp, double gamma_exp, double c, int d);

/// Free-boundary radius c t^alpha.
double support_radius(const FamilyParams& p, double t);

/// Density at a point of R^d; x.size() must equal p.dim().
double pdf(const FamilyParams& p, std::span<const double> x, double t);

/// Density at any point with |x| = r.
double pdf_at_radius(const FamilyParams& p, double r, double t);

/// Density of |X|: |S^{d-1}| r^{d-1} u(r, t).
double radial_pdf(const FamilyParams& p, double r, double t);

/// mu_t(B_a) = I_{(a / c t^alpha)^beta}(d/beta, gamma + 1).
double ball_probability(const FamilyParams& p, double a, double t);

/// Distribution function of the one-dimensional law,
/// F(x) = 1/2 [1 + sgn(x) I_{(|x|/c t^alpha)^beta}(1/beta, gamma + 1)].
double cdf_1d(const FamilyParams& p, double x, double t);

/// The same expression with the incomplete-beta argument left unpowered,
/// |x| / (c t^alpha). Only kept so the two readings can be compared; it is
/// not a distribution function of u unless beta = 1.
double cdf_1d_unpowered(const FamilyParams& p, double x, double t);

double quantile_1d(const FamilyParams& p, double q, double t);

/// E|X|^k = c^k t^(alpha k) B((d + k)/beta, gamma + 1) / B(d/beta, gamma + 1).
double radial_moment(const FamilyParams& p, double k, double t);

/// u(x, t) - L^(d alpha) u(L^alpha x, L t).
double self_similarity_residual(const FamilyParams& p, std::span<const double> x, double t,
                                double L);

/// Total mass at time t by quadrature of radial_pdf over [0, c t^alpha].
double total_mass(const FamilyParams& p, double t, const QuadratureConfig& cfg = {});

} // namespace barenblatt

#endif // BARENBLATT_FAMILY_HPP
