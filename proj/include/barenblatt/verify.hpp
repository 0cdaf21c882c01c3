#ifndef BARENBLATT_VERIFY_HPP
#define BARENBLATT_VERIFY_HPP

#include "barenblatt/report.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace barenblatt {

struct ResidualOptions {
    /// Evaluation points satisfy |x| <= interior_fraction * r(t).
    double interior_fraction = 0.8;
    /// Number of dyadic spacings h, h/2, h/4, ...; at least 3.
    int levels = 3;
    /// Evaluation points per level.
    int points = 16;
};

/// Maximum interior finite-difference residual at each of several dyadic
/// spacings, normalised by max|u| over the evaluation points, and the
/// least-squares slope of log residual against log h.
struct ResidualReport {
    std::string equation;
    std::vector<std::pair<std::string, double>> params;
    std::vector<double> h;
    std::vector<double> max_residual;
    double order = 0.0;

    bool converges(double lo = 1.7, double hi = 2.3) const;
};

/// Least-squares slope of log(residual) on log(h).
double empirical_order(std::span<const double> h, std::span<const double> residual);

/// u_t - ((m-1)/m) Delta(u^m) for the porous-medium profile
/// t^(-alpha d)(1 - |x|^2/(c t^alpha)^2)_+^(1/(m-1)) with the exponents and
/// c of npme_preset(m, 2, d). The amplitude is the one fixed by the
/// equation, which is 1. negative_control multiplies gamma by 1.1.
ResidualReport pme_residual(double m, int d, double t, double h, const ResidualOptions& opt = {},
                            bool negative_control = false);

/// The same residual for the unit-mass density of npme_preset. The
/// equation is nonlinear, so this one does not vanish unless C = 1.
ResidualReport pme_residual_mass_normalized(double m, int d, double t, double h,
                                            const ResidualOptions& opt = {});

/// u_tt + ((d + 2 nu - 1)/t) u_t - c^2 Delta u for the epd_preset density.
/// negative_control multiplies alpha by 1.1.
ResidualReport epd_residual(double nu, double c, int d, double t, double h,
                            const ResidualOptions& opt = {}, bool negative_control = false);

/// u_tt + ((1 - alpha)/t) u_t - v^2 alpha^2 t^(2 alpha - 2) u_xx for
/// u = g(x - v t^alpha), g(z) = exp(-z^2/2), evaluated at t = 1 over
/// x - v in [-3, 3]. negative_control uses t^(alpha/2) in the travelling
/// coordinate.
ResidualReport epd_type_wave_residual(double alpha, double v, double h,
                                      const ResidualOptions& opt = {},
                                      bool negative_control = false);

/// u_tt + (2 xi / t) u_t - c^2 u_xx for u = epd_dalembert_1d(cos(k .), xi, c),
/// over x in [0, 2 pi / k) at time t.
ResidualReport epd_dalembert_residual(double xi, double c, double k, double t, double h,
                                      const ResidualOptions& opt = {});

Table residual_table(const std::vector<ResidualReport>& reports);

struct SuiteConfig {
    std::uint64_t seed = 20261014;
    std::uint64_t stream = 0;
    std::size_t n_samples = 100000;
    unsigned threads = 1;
    int h_levels = 3;
    double interior_fraction = 0.8;
};

/// status is "pass", "fail", "info" or "skipped". Only "fail" fails a suite.
struct CheckResult {
    std::string name;
    std::string status;
    double value = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    std::vector<std::pair<std::string, Table>> tables;

    bool passed() const;
    Table checks_table() const;
    std::string to_json() const;
};

/// normalization, representations, transforms, presets, fractional, pde, sampling.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Throws DomainError for an unknown suite name.
SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg = {});

} // namespace barenblatt

#endif // BARENBLATT_VERIFY_HPP
