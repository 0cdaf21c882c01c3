#include "barenblatt/sampling.hpp"

#include "barenblatt/errors.hpp"
#include "barenblatt/specfun.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace barenblatt {

namespace {

double strictly_below(double v, double bound) {
    return v < bound ? v : std::nextafter(bound, 0.0);
}

double radius_from_beta(double y, double radius, double beta) {
    return strictly_below(radius * std::pow(y, 1.0 / beta), radius);
}

double ks_critical(double alpha, double n_eff) {
    return kolmogorov_c(alpha) / std::sqrt(n_eff);
}

} // namespace

double sample_beta(RngStream& rng, double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) throw DomainError("sample_beta: requires a, b > 0");
    const double y = inv_reg_inc_beta(rng.uniform(), a, b);
    if (y <= 0.0) return std::numeric_limits<double>::denorm_min();
    return strictly_below(y, 1.0);
}

double sample_velocity(RngStream& rng, const FamilyParams& p) {
    if (p.dim() != 1) throw DimensionError("sample_velocity: requires d = 1");
    const double y = sample_beta(rng, 1.0 / p.beta_exp(), p.gamma_exp() + 1.0);
    return radius_from_beta(y, p.c(), p.beta_exp());
}

double sample_position_1d(RngStream& rng, const FamilyParams& p, double t) {
    if (p.dim() != 1) throw DimensionError("sample_position_1d: requires d = 1");
    const double radius = support_radius(p, t);
    const int sign = rng.sign();
    const double y = sample_beta(rng, 1.0 / p.beta_exp(), p.gamma_exp() + 1.0);
    return sign * radius_from_beta(y, radius, p.beta_exp());
}

std::vector<double> sample_direction(RngStream& rng, int d) {
    if (d < 2) throw DimensionError("sample_direction: requires d >= 2");
    std::vector<double> v(static_cast<std::size_t>(d));
    double ss = 0.0;
    do {
        ss = 0.0;
        for (double& x : v) {
            x = rng.normal();
            ss += x * x;
        }
    } while (ss == 0.0);
    const double inv = 1.0 / std::sqrt(ss);
    for (double& x : v) x *= inv;
    return v;
}

double sample_radius(RngStream& rng, const FamilyParams& p, double t) {
    const double radius = support_radius(p, t);
    const double y = sample_beta(rng, p.dim() / p.beta_exp(), p.gamma_exp() + 1.0);
    return radius_from_beta(y, radius, p.beta_exp());
}

std::vector<double> sample_position(RngStream& rng, const FamilyParams& p, double t) {
    if (p.dim() == 1) return {sample_position_1d(rng, p, t)};
    const double radius = support_radius(p, t);
    const double r = sample_radius(rng, p, t);
    std::vector<double> x = sample_direction(rng, p.dim());
    double ss = 0.0;
    for (double& v : x) {
        v *= r;
        ss += v * v;
    }
    // Rounding in the direction can push |x| a hair past r.
    if (std::sqrt(ss) >= radius) {
        const double shrink = std::nextafter(radius, 0.0) / std::sqrt(ss);
        for (double& v : x) v *= shrink;
    }
    return x;
}

double sample_projection_w(RngStream& rng, int d) {
    if (d < 2) throw DimensionError("sample_projection_w: requires d >= 2");
    return std::sqrt(sample_beta(rng, 0.5, 0.5 * (d - 1)));
}

TelegraphPath sample_epd_telegraph_path(RngStream& rng, double xi, double c, double t,
                                        double eps) {
    if (!(xi > 0.0) || !(c > 0.0) || !(t > 0.0)) {
        throw DomainError("sample_epd_telegraph: requires xi, c, t > 0");
    }
    if (!(eps > 0.0) || !(eps < t)) {
        throw DomainError("sample_epd_telegraph: requires 0 < eps < t, got eps = " +
                          std::to_string(eps));
    }
    TelegraphPath path;
    int sign = rng.sign();
    double s = t;
    double acc = 0.0;
    for (;;) {
        const double next = s * std::exp(-rng.exponential() / xi);
        if (next <= eps) {
            acc += sign * (s - eps);
            break;
        }
        acc += sign * (s - next);
        sign = -sign;
        s = next;
        ++path.flips;
    }
    path.value = c * acc;
    return path;
}

double sample_epd_telegraph(RngStream& rng, double xi, double c, double t, double eps) {
    return sample_epd_telegraph_path(rng, xi, c, t, eps).value;
}

double kolmogorov_c(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("kolmogorov_c: requires 0 < alpha < 1");
    return std::sqrt(-std::log(alpha / 2.0) / 2.0);
}

KSResult ks_test(std::span<const double> sorted, const std::function<double(double)>& cdf,
                 double alpha) {
    if (sorted.empty()) throw DomainError("ks_test: empty sample");
    const double n = static_cast<double>(sorted.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double f = cdf(sorted[i]);
        d = std::max({d, (i + 1) / n - f, f - i / n});
    }
    KSResult r;
    r.statistic = d;
    r.n = sorted.size();
    r.critical_value = ks_critical(alpha, n);
    r.pass = d < r.critical_value;
    return r;
}

KSResult ks_test_two_sample(std::span<const double> a, std::span<const double> b, double alpha) {
    if (a.empty() || b.empty()) throw DomainError("ks_test_two_sample: empty sample");
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        const double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) ++i;
        while (j < b.size() && b[j] <= x) ++j;
        d = std::max(d, std::fabs(i / na - j / nb));
    }
    KSResult r;
    r.statistic = d;
    r.n = a.size();
    r.critical_value = ks_critical(alpha, na * nb / (na + nb));
    r.pass = d < r.critical_value;
    return r;
}

} // namespace barenblatt
