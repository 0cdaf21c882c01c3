#include "barenblatt/quadrature.hpp"

#include "barenblatt/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <queue>
#include <string>
#include <vector>

namespace barenblatt {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Kronrod abscissae (positive half, descending) with the embedded 7-point
// Gauss rule living on the odd-indexed nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a;
    double b;
    double value;
    double error;
    double floor; // roundoff limit of the rule on this panel
    bool operator<(const Panel& other) const { return error < other.error; }
};

// One G7K15 application with the QUADPACK error heuristics.
Panel gk15(const Integrand& f, double a, double b) {
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(centre);
    double res_g = fc * kWg[3];
    double res_k = fc * kWgk[7];
    double res_abs = std::fabs(res_k);
    std::array<double, 7> f1{};
    std::array<double, 7> f2{};
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        f1[j] = f(centre - dx);
        f2[j] = f(centre + dx);
        const double s = f1[j] + f2[j];
        res_k += kWgk[j] * s;
        res_abs += kWgk[j] * (std::fabs(f1[j]) + std::fabs(f2[j]));
        if (j % 2 == 1) res_g += kWg[j / 2] * s;
    }
    const double mean = 0.5 * res_k;
    double res_asc = kWgk[7] * std::fabs(fc - mean);
    for (int j = 0; j < 7; ++j) {
        res_asc += kWgk[j] * (std::fabs(f1[j] - mean) + std::fabs(f2[j] - mean));
    }
    res_k *= half;
    res_abs *= std::fabs(half);
    res_asc *= std::fabs(half);
    double err = std::fabs((res_k - res_g * half));
    if (res_asc != 0.0 && err != 0.0) {
        err = res_asc * std::min(1.0, std::pow(200.0 * err / res_asc, 1.5));
    }
    const double floor = 50.0 * kEps * res_abs;
    if (res_abs > std::numeric_limits<double>::min() / (50.0 * kEps)) {
        err = std::max(floor, err);
    }
    return {a, b, res_k, err, floor};
}

// Besides the requested tolerance, an estimate within twice the summed
// roundoff floors is accepted: further bisection cannot reduce it.
double tolerance(const QuadratureConfig& cfg, double value, double floor) {
    return std::max({cfg.abs_tol, cfg.rel_tol * std::fabs(value), 2.0 * floor});
}

QuadratureResult adapt(const Integrand& f, double a, double b, const QuadratureConfig& cfg) {
    std::priority_queue<Panel> heap;
    Panel first = gk15(f, a, b);
    double total = first.value;
    double total_err = first.error;
    double total_floor = first.floor;
    heap.push(first);
    int subdivisions = 0;
    while (total_err > tolerance(cfg, total, total_floor) && subdivisions < cfg.max_subdivisions) {
        Panel worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b) ||
            (worst.b - worst.a) < 8.0 * kEps * std::max(std::fabs(worst.a), 1e-300)) {
            break; // interval can no longer be split
        }
        heap.pop();
        Panel left = gk15(f, worst.a, mid);
        Panel right = gk15(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        total_floor += left.floor + right.floor - worst.floor;
        heap.push(left);
        heap.push(right);
        ++subdivisions;
        if (subdivisions % 64 == 0) {
            // Resum to keep cancellation error out of the running totals.
            auto copy = heap;
            total = 0.0;
            total_err = 0.0;
            total_floor = 0.0;
            while (!copy.empty()) {
                total += copy.top().value;
                total_err += copy.top().error;
                total_floor += copy.top().floor;
                copy.pop();
            }
        }
    }
    QuadratureResult out;
    out.value = total;
    out.abs_error = total_err;
    out.subdivisions = subdivisions;
    out.converged = total_err <= tolerance(cfg, total, total_floor);
    return out;
}

} // namespace

void QuadratureConfig::validate() const {
    if (!(abs_tol > 0.0)) throw DomainError("QuadratureConfig: abs_tol must be > 0");
    if (!(rel_tol > 0.0)) throw DomainError("QuadratureConfig: rel_tol must be > 0");
    if (max_subdivisions < 1) throw DomainError("QuadratureConfig: max_subdivisions must be >= 1");
}

QuadratureResult integrate_checked(const Integrand& f, double a, double b,
                                   const QuadratureConfig& cfg) {
    cfg.validate();
    if (!(a <= b)) throw DomainError("integrate: requires a <= b");
    if (a == b) return {0.0, 0.0, 0, true};
    const double width = b - a;
    auto mapped = [&](double u) {
        const double v = 1.0 - u;
        const double jac = 6.0 * u * v * width;
        if (jac == 0.0) return 0.0;
        // Evaluate from the nearer endpoint to keep the offset accurate.
        const double x = (u < 0.5) ? a + width * (u * u * (3.0 - 2.0 * u))
                                   : b - width * (v * v * (3.0 - 2.0 * v));
        return f(x) * jac;
    };
    return adapt(mapped, 0.0, 1.0, cfg);
}

double integrate(const Integrand& f, double a, double b, const QuadratureConfig& cfg) {
    const QuadratureResult r = integrate_checked(f, a, b, cfg);
    if (!r.converged) {
        char buf[200];
        std::snprintf(buf, sizeof buf,
                      "integrate: no convergence on [%.6g, %.6g] after %d subdivisions "
                      "(estimate %.6g, error %.3g)",
                      a, b, r.subdivisions, r.value, r.abs_error);
        throw ConvergenceError(buf);
    }
    return r.value;
}

double integrate_weighted(const Integrand& g, double a, double b, EndpointExponents w,
                          const QuadratureConfig& cfg) {
    if (!(w.left > -1.0) || !(w.right > -1.0)) {
        throw DomainError("integrate_weighted: endpoint exponents must be > -1");
    }
    if (!(a <= b)) throw DomainError("integrate_weighted: requires a <= b");
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double half = m - a;
    QuadratureConfig sub = cfg;
    sub.abs_tol = 0.5 * cfg.abs_tol;

    // Left half: x - a = half * s^(1/(left+1)), (x - a)^left dx = half^(left+1)/(left+1) ds.
    const double pl = w.left + 1.0;
    auto left = [&](double s) {
        const double off = half * std::pow(s, 1.0 / pl);
        const double x = a + off;
        return g(x) * std::pow(b - x, w.right);
    };
    // Right half mirrors the left.
    const double pr = w.right + 1.0;
    auto right = [&](double s) {
        const double off = half * std::pow(s, 1.0 / pr);
        const double x = b - off;
        return g(x) * std::pow(x - a, w.left);
    };
    const double lv = std::pow(half, pl) / pl * integrate(left, 0.0, 1.0, sub);
    const double rv = std::pow(half, pr) / pr * integrate(right, 0.0, 1.0, sub);
    return lv + rv;
}

double integrate_panels(const Integrand& f, double a, double b, double max_panel,
                        const QuadratureConfig& cfg) {
    if (!(a <= b)) throw DomainError("integrate_panels: requires a <= b");
    if (a == b) return 0.0;
    if (!(max_panel > 0.0)) return integrate(f, a, b, cfg);
    const double n_real = std::ceil((b - a) / max_panel);
    const int n = static_cast<int>(std::clamp(n_real, 1.0, 1e6));
    const double width = (b - a) / n;
    QuadratureConfig sub = cfg;
    sub.abs_tol = cfg.abs_tol / n;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        const double lo = a + i * width;
        const double hi = (i + 1 == n) ? b : a + (i + 1) * width;
        sum += integrate(f, lo, hi, sub);
    }
    return sum;
}

} // namespace barenblatt
