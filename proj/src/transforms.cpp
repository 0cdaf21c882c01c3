#include "barenblatt/transforms.hpp"

#include "barenblatt/errors.hpp"
#include "barenblatt/report.hpp"
#include "barenblatt/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace barenblatt {

namespace {

// int_0^1 (1 - s)^edge g(s) ds where g oscillates at angular frequency omega.
// Panels are at most half a period wide; only the last one touches s = 1 and
// gets the weighted rule.
double oscillatory_edge_integral(const Integrand& g, double omega, double edge,
                                 const QuadratureConfig& cfg) {
    const double max_panel = omega > 0.0 ? std::numbers::pi / omega : 1.0;
    const int n = static_cast<int>(std::clamp(std::ceil(1.0 / max_panel), 1.0, 1e6));
    const double width = 1.0 / n;
    QuadratureConfig sub = cfg;
    sub.abs_tol = cfg.abs_tol / n;
    double sum = 0.0;
    for (int i = 0; i + 1 < n; ++i) {
        const double lo = i * width;
        const double hi = (i + 1) * width;
        sum += integrate([&](double s) { return std::pow(1.0 - s, edge) * g(s); }, lo, hi, sub);
    }
    const double lo = (n - 1) * width;
    sum += integrate_weighted(g, lo, 1.0, {0.0, edge}, sub);
    return sum;
}

// ((1 - s^beta) / (1 - s))^gamma, continuous at s = 1 with value beta^gamma.
double edge_ratio(double s, double beta, double gamma) {
    if (s >= 1.0) return std::pow(beta, gamma);
    if (s <= 0.0) return 1.0;
    const double num = -std::expm1(beta * std::log(s));
    return std::pow(num / (1.0 - s), gamma);
}

void require_time(double t) {
    if (!(t > 0.0)) throw DomainError("time must be > 0");
}

} // namespace

double char_fn_1d(const FamilyParams& p, double xi, double t, const QuadratureConfig& cfg) {
    if (p.dim() != 1) throw DimensionError("char_fn_1d: requires d = 1");
    require_time(t);
    const double beta = p.beta_exp();
    const double gamma = p.gamma_exp();
    const double omega = std::fabs(xi) * p.c() * std::pow(t, p.alpha());
    if (omega == 0.0) return 1.0;
    const double scale = beta / beta_fn(1.0 / beta, gamma + 1.0);
    auto g = [&](double s) { return std::cos(omega * s) * edge_ratio(s, beta, gamma); };
    return scale * oscillatory_edge_integral(g, omega, gamma, cfg);
}

double char_fn_radial(const FamilyParams& p, double xi_norm, double t,
                      const QuadratureConfig& cfg) {
    if (p.dim() < 2) throw DimensionError("char_fn_radial: requires d >= 2");
    require_time(t);
    const int d = p.dim();
    const double beta = p.beta_exp();
    const double gamma = p.gamma_exp();
    const double omega = std::fabs(xi_norm) * p.c() * std::pow(t, p.alpha());
    if (omega == 0.0) return 1.0;
    const double mu = 0.5 * d - 1.0;
    const double scale = beta / beta_fn(d / beta, gamma + 1.0);
    auto g = [&](double s) {
        return std::pow(s, d - 1) * edge_ratio(s, beta, gamma) * bessel_j_normalized(mu, omega * s);
    };
    return scale * oscillatory_edge_integral(g, omega, gamma, cfg);
}

double projection_cos_mean(int d, double x, const QuadratureConfig& cfg) {
    if (d < 2) throw DimensionError("projection_cos_mean: requires d >= 2");
    if (x == 0.0) return 1.0;
    // f_W(w) = 2 (1 - w)^q (1 + w)^q / B(1/2, (d-1)/2), q = (d-3)/2.
    const double q = 0.5 * (d - 3);
    const double scale = 2.0 / beta_fn(0.5, 0.5 * (d - 1));
    auto g = [&](double w) { return std::pow(1.0 + w, q) * std::cos(x * w); };
    return scale * oscillatory_edge_integral(g, std::fabs(x), q, cfg);
}

double char_fn_projection(const FamilyParams& p, double xi_norm, double t,
                          const QuadratureConfig& cfg) {
    if (p.dim() < 2) throw DimensionError("char_fn_projection: requires d >= 2");
    require_time(t);
    const int d = p.dim();
    const double beta = p.beta_exp();
    const double gamma = p.gamma_exp();
    const double omega = std::fabs(xi_norm) * p.c() * std::pow(t, p.alpha());
    if (omega == 0.0) return 1.0;
    const double scale = beta / beta_fn(d / beta, gamma + 1.0);
    QuadratureConfig inner = cfg;
    inner.abs_tol = 0.1 * cfg.abs_tol;
    inner.rel_tol = 0.1 * cfg.rel_tol;
    auto g = [&](double s) {
        return std::pow(s, d - 1) * edge_ratio(s, beta, gamma) *
               projection_cos_mean(d, omega * s, inner);
    };
    return scale * oscillatory_edge_integral(g, omega, gamma, cfg);
}

void EKParams::validate() const {
    if (!(mu > 0.0)) throw DomainError("EKParams: mu must be > 0");
    if (!(eta > 0.0)) throw DomainError("EKParams: eta must be > 0");
    if (!(zeta > -1.0)) throw DomainError("EKParams: zeta must be > -1");
}

double ek_integral(const EKParams& ek, const std::function<double(double)>& f, double x,
                   const QuadratureConfig& cfg) {
    ek.validate();
    if (!(x > 0.0)) throw DomainError("ek_integral: requires x > 0");
    auto g = [&](double s) { return f(x * std::pow(s, 1.0 / ek.eta)); };
    const double v = integrate_weighted(g, 0.0, 1.0, {ek.zeta, ek.mu - 1.0}, cfg);
    return v * std::exp(-ln_gamma(ek.mu));
}

double epd_dalembert_1d(const std::function<double(double)>& f, double xi_param, double c,
                        double x, double t, const QuadratureConfig& cfg) {
    if (!(xi_param > 0.0)) throw DomainError("epd_dalembert_1d: requires xi > 0");
    if (!(c > 0.0)) throw DomainError("epd_dalembert_1d: requires c > 0");
    if (t < 0.0) throw DomainError("epd_dalembert_1d: requires t >= 0");
    if (t == 0.0) return f(x);
    const double e = xi_param - 1.0;
    auto g = [&](double y) {
        return std::pow(1.0 + y, e) * 0.5 * (f(x + y * c * t) + f(x - y * c * t));
    };
    const double v = integrate_weighted(g, 0.0, 1.0, {0.0, e}, cfg);
    return 2.0 * v / beta_fn(xi_param, 0.5);
}

double verify_prop1_identity(const FamilyParams& p, double x, double t) {
    if (p.dim() != 1) throw DimensionError("verify_prop1_identity: requires d = 1");
    const double u = pdf_at_radius(p, x, t);
    const double ta = std::pow(t, p.alpha());
    const double v = std::fabs(x) / ta;
    const double c = p.c();
    const double beta = p.beta_exp();
    double f_v = 0.0;
    if (v > 0.0 && v < c) {
        const double y = std::pow(v / c, beta);
        f_v = (beta / c) * std::pow(v / c, beta - 1.0) *
              beta_pdf(y, 1.0 / beta, p.gamma_exp() + 1.0);
    }
    return u - f_v / (2.0 * ta);
}

Prop2Row verify_prop2_prefactor(const FamilyParams& p, double r, double t) {
    if (p.dim() < 2) throw DimensionError("verify_prop2_prefactor: requires d >= 2");
    const int d = p.dim();
    const double beta = p.beta_exp();
    const double gamma = p.gamma_exp();
    const double c = p.c();
    const double ta = std::pow(t, p.alpha());
    Prop2Row row{d, p.alpha(), beta, gamma, c, r, t};
    row.pdf = pdf_at_radius(p, r, t);

    const double a1 = (0.5 * d + 1.0) / beta;
    const double prefactor =
        std::exp(ln_beta(a1, gamma + 1.0) - ln_sphere_surface(d) -
                 (0.5 * d - 1.0) * std::log(c * ta * r) - ln_beta(d / beta, gamma + 1.0));
    const double z = r / ta;
    double f_z = 0.0;
    if (z > 0.0 && z < c) {
        f_z = (beta / c) * std::pow(z / c, beta - 1.0) *
              beta_pdf(std::pow(z / c, beta), a1, gamma + 1.0);
    }
    row.paper_form = prefactor * f_z / ta;
    row.corrected_form = row.paper_form / r;
    if (row.pdf > 0.0) {
        row.residual_paper_form = (row.paper_form - row.pdf) / row.pdf;
        row.residual_corrected_form = (row.corrected_form - row.pdf) / row.pdf;
    } else {
        row.residual_paper_form = row.paper_form;
        row.residual_corrected_form = row.corrected_form;
    }
    return row;
}

Prop2Report prop2_report(const std::vector<FamilyParams>& families,
                         const std::vector<double>& r_fractions, const std::vector<double>& times,
                         double tol) {
    Prop2Report rep;
    for (const auto& p : families) {
        for (double t : times) {
            const double radius = support_radius(p, t);
            for (double f : r_fractions) {
                const Prop2Row row = verify_prop2_prefactor(p, f * radius, t);
                rep.max_residual_paper_form =
                    std::max(rep.max_residual_paper_form, std::fabs(row.residual_paper_form));
                rep.max_residual_corrected_form = std::max(rep.max_residual_corrected_form,
                                                           std::fabs(row.residual_corrected_form));
                rep.rows.push_back(row);
            }
        }
    }
    const bool paper_ok = rep.max_residual_paper_form <= tol;
    const bool corrected_ok = rep.max_residual_corrected_form <= tol;
    rep.matching_variant = paper_ok && corrected_ok ? "both"
                           : paper_ok               ? "paper_form"
                           : corrected_ok           ? "corrected_form"
                                                    : "none";
    return rep;
}

std::string prop2_csv(const Prop2Report& report) {
    Table tab({"d", "alpha", "beta", "gamma", "c", "r", "t", "residual_paper_form",
               "residual_corrected_form"});
    for (const auto& row : report.rows) {
        tab.add_row({static_cast<std::int64_t>(row.d), row.alpha, row.beta, row.gamma, row.c, row.r,
                     row.t, row.residual_paper_form, row.residual_corrected_form});
    }
    return tab.to_csv();
}

} // namespace barenblatt
