#ifndef BARENBLATT_TRANSFORMS_HPP
#define BARENBLATT_TRANSFORMS_HPP

#include "barenblatt/family.hpp"
#include "barenblatt/quadrature.hpp"

#include <functional>
#include <string>
#include <vector>

namespace barenblatt {

/// Fourier transform of the one-dimensional law, E[cos(xi V t^alpha)].
/// Quadrature in panels at most half an oscillation period wide; the last
/// panel carries the (1 - v/c)^gamma edge weight exactly.
double char_fn_1d(const FamilyParams& p, double xi, double t,
                  const QuadratureConfig& cfg = {});

/// Fourier transform for d >= 2 through the Bessel form
///   (beta / B(d/beta, gamma+1)) int_0^1 s^(d-1) (1 - s^beta)^gamma
///       Lambda_{d/2-1}(|xi| c t^alpha s) ds,
/// Lambda_mu(x) = Gamma(mu+1) (2/x)^mu J_mu(x).
double char_fn_radial(const FamilyParams& p, double xi_norm, double t,
                      const QuadratureConfig& cfg = {});

/// The same transform as E[cos(|xi| U W t^alpha)], U the radial law and W
/// the projection law, by nested quadrature. Shares no code path with
/// char_fn_radial beyond the outer radial weight.
double char_fn_projection(const FamilyParams& p, double xi_norm, double t,
                          const QuadratureConfig& cfg = {});

/// E[cos(x W)] for the projection law of S^{d-1}, d >= 2.
double projection_cos_mean(int d, double x, const QuadratureConfig& cfg = {});

struct EKParams {
    double zeta = 0.0;
    double mu = 1.0;
    double eta = 1.0;

    void validate() const;
};

/// Erdelyi-Kober integral
///   I f(x) = eta x^(-eta(mu+zeta)) / Gamma(mu)
///            int_0^x tau^(eta(zeta+1)-1) (x^eta - tau^eta)^(mu-1) f(tau) dtau,
/// evaluated after s = (tau/x)^eta as
///   1/Gamma(mu) int_0^1 s^zeta (1-s)^(mu-1) f(x s^(1/eta)) ds.
/// Requires zeta > -1 so the integral exists for f(0) != 0.
double ek_integral(const EKParams& ek, const std::function<double(double)>& f, double x,
                   const QuadratureConfig& cfg = {});

/// Solution of u_tt + (2 xi / t) u_t = c^2 u_xx with u(.,0) = f, u_t(.,0) = 0:
///   2/B(xi, 1/2) int_0^1 (1 - y^2)^(xi-1) [f(x + yct) + f(x - yct)]/2 dy.
double epd_dalembert_1d(const std::function<double(double)>& f, double xi_param, double c,
                        double x, double t, const QuadratureConfig& cfg = {});

/// u(x, t) - f_V(|x| / t^alpha) / (2 t^alpha), with f_V the velocity
/// density built from beta_pdf rather than from the family formula.
double verify_prop1_identity(const FamilyParams& p, double x, double t);

/// Both readings of the d >= 2 radial representation at one point.
/// paper_form  = P f_Z(r / t^alpha) / t^alpha,
///     P = B((d/2+1)/beta, gamma+1) / (|S^{d-1}| (c t^alpha r)^(d/2-1) B(d/beta, gamma+1)),
///     Z = c Y^(1/beta), Y ~ Beta((d/2+1)/beta, gamma+1);
/// corrected_form = paper_form / r.
/// Residuals are relative to pdf(p, r, t).
struct Prop2Row {
    int d = 0;
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double c = 0.0;
    double r = 0.0;
    double t = 0.0;
    double pdf = 0.0;
    double paper_form = 0.0;
    double corrected_form = 0.0;
    double residual_paper_form = 0.0;
    double residual_corrected_form = 0.0;
};

Prop2Row verify_prop2_prefactor(const FamilyParams& p, double r, double t);

struct Prop2Report {
    std::vector<Prop2Row> rows;
    double max_residual_paper_form = 0.0;
    double max_residual_corrected_form = 0.0;
    /// "paper_form", "corrected_form", "both" or "none" at the given tolerance.
    std::string matching_variant;
};

Prop2Report prop2_report(const std::vector<FamilyParams>& families, const std::vector<double>& r_fractions,
                         const std::vector<double>& times, double tol);

/// CSV with header d,alpha,beta,gamma,c,r,t,residual_paper_form,residual_corrected_form.
std::string prop2_csv(const Prop2Report& report);

} // namespace barenblatt

#endif // BARENBLATT_TRANSFORMS_HPP
