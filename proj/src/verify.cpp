#include "barenblatt/verify.hpp"

#include "barenblatt/errors.hpp"
#include "barenblatt/family.hpp"
#include "barenblatt/fractional.hpp"
#include "barenblatt/presets.hpp"
#include "barenblatt/sampling.hpp"
#include "barenblatt/specfun.hpp"
#include "barenblatt/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <json.hpp>
#include <numbers>
#include <sstream>

namespace barenblatt {

namespace {

using Fn1 = std::function<double(double)>;

double d1(const Fn1& f, double x, double h) { return (f(x + h) - f(x - h)) / (2.0 * h); }

double d2(const Fn1& f, double x, double h) {
    return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

// u_rr + (d-1)/r u_r for a radial profile, f taken even in r.
double radial_laplacian(const Fn1& f, double r, double h, int d) {
    const Fn1 even = [&](double s) { return f(std::fabs(s)); };
    double lap = d2(even, r, h);
    if (d > 1) lap += (d - 1) / r * d1(even, r, h);
    return lap;
}

void validate_options(const ResidualOptions& opt) {
    if (opt.levels < 3) throw DomainError("residual study needs at least 3 levels");
    if (opt.points < 1) throw DomainError("residual study needs at least one point");
    if (!(opt.interior_fraction > 0.0 && opt.interior_fraction < 1.0)) {
        throw DomainError("interior_fraction must lie in (0, 1)");
    }
}

ResidualReport study(std::string equation, std::vector<std::pair<std::string, double>> params,
                     double h0, const ResidualOptions& opt,
                     const std::function<double(double)>& level) {
    validate_options(opt);
    if (!(h0 > 0.0)) throw DomainError("residual study: h must be > 0");
    ResidualReport rep;
    rep.equation = std::move(equation);
    rep.params = std::move(params);
    double h = h0;
    for (int i = 0; i < opt.levels; ++i, h *= 0.5) {
        rep.h.push_back(h);
        rep.max_residual.push_back(level(h));
    }
    rep.order = empirical_order(rep.h, rep.max_residual);
    return rep;
}

std::vector<double> radial_points(double radius, const ResidualOptions& opt) {
    std::vector<double> r;
    for (int j = 0; j < opt.points; ++j) {
        r.push_back(opt.interior_fraction * radius * (j + 1) / opt.points);
    }
    return r;
}

// Backward-in-time stencils see the smallest support, c (t - h)^alpha.
void check_stencil(double r_max, double h, double t, double c, double alpha) {
    if (!(t - h > 0.0) || r_max + h >= c * std::pow(t - h, alpha)) {
        throw GridError("stencil leaves the support: reduce h or interior_fraction");
    }
}

// Profile of the porous-medium solution with free amplitude.
struct PmeProfile {
    double alpha, gamma, c, amp, m;
    int d;
    double u(double r, double t) const {
        const double s = r / (c * std::pow(t, alpha));
        if (s >= 1.0) return 0.0;
        return amp * std::pow(t, -alpha * d) * std::pow(1.0 - s * s, gamma);
    }
};

double pme_level(const PmeProfile& p, double t, double h, const ResidualOptions& opt) {
    const auto pts = radial_points(p.c * std::pow(t, p.alpha), opt);
    check_stencil(pts.back(), h, t, p.c, p.alpha);
    double worst = 0.0;
    double scale = 0.0;
    for (double r : pts) {
        const double ut = d1([&](double s) { return p.u(r, s); }, t, h);
        const double lap = radial_laplacian([&](double q) { return std::pow(p.u(q, t), p.m); }, r,
                                            h, p.d);
        worst = std::max(worst, std::fabs(ut - (p.m - 1.0) / p.m * lap));
        scale = std::max(scale, std::fabs(p.u(r, t)));
    }
    return worst / scale;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

std::string describe(const std::vector<std::pair<std::string, double>>& params) {
    std::string s;
    for (const auto& [k, v] : params) {
        if (!s.empty()) s += ' ';
        s += k + "=" + fmt(v);
    }
    return s;
}

} // namespace

bool ResidualReport::converges(double lo, double hi) const {
    return std::isfinite(order) && order >= lo && order <= hi;
}

double empirical_order(std::span<const double> h, std::span<const double> residual) {
    if (h.size() != residual.size() || h.size() < 2) {
        throw DomainError("empirical_order: need matching arrays of length >= 2");
    }
    const double n = static_cast<double>(h.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < h.size(); ++i) {
        const double x = std::log(h[i]);
        const double y = std::log(std::max(residual[i], std::numeric_limits<double>::min()));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

ResidualReport pme_residual(double m, int d, double t, double h, const ResidualOptions& opt,
                            bool negative_control) {
    const auto [np, fam] = npme_preset(m, 2.0, d);
    PmeProfile prof{fam.alpha(), fam.gamma_exp() * (negative_control ? 1.1 : 1.0), fam.c(), 1.0, m,
                    d};
    return study(negative_control ? "pme_negative_control" : "pme",
                 {{"m", m}, {"d", d}, {"t", t}}, h, opt,
                 [&](double hh) { return pme_level(prof, t, hh, opt); });
}

ResidualReport pme_residual_mass_normalized(double m, int d, double t, double h,
                                            const ResidualOptions& opt) {
    const auto [np, fam] = npme_preset(m, 2.0, d);
    PmeProfile prof{fam.alpha(), fam.gamma_exp(), fam.c(), fam.norm_c(), m, d};
    return study("pme_mass_normalized", {{"m", m}, {"d", d}, {"t", t}}, h, opt,
                 [&](double hh) { return pme_level(prof, t, hh, opt); });
}

ResidualReport epd_residual(double nu, double c, int d, double t, double h,
                            const ResidualOptions& opt, bool negative_control) {
    const auto [ep, base] = epd_preset(nu, c, d);
    const FamilyParams fam(base.alpha() * (negative_control ? 1.1 : 1.0), 2.0, base.gamma_exp(), c, d);
    const double k = d + 2.0 * nu - 1.0;
    auto level = [&](double hh) {
        const auto pts = radial_points(support_radius(fam, t), opt);
        check_stencil(pts.back(), hh, t, c, fam.alpha());
        double worst = 0.0;
        double scale = 0.0;
        for (double r : pts) {
            const Fn1 in_t = [&](double s) { return pdf_at_radius(fam, r, s); };
            const Fn1 in_r = [&](double q) { return pdf_at_radius(fam, q, t); };
            const double res = d2(in_t, t, hh) + k / t * d1(in_t, t, hh) -
                               c * c * radial_laplacian(in_r, r, hh, d);
            worst = std::max(worst, std::fabs(res));
            scale = std::max(scale, std::fabs(in_r(r)));
        }
        return worst / scale;
    };
    return study(negative_control ? "epd_negative_control" : "epd",
                 {{"nu", nu}, {"c", c}, {"d", d}, {"t", t}}, h, opt, level);
}

ResidualReport epd_type_wave_residual(double alpha, double v, double h, const ResidualOptions& opt,
                                      bool negative_control) {
    if (!(alpha > 0.0) || !(v > 0.0)) throw DomainError("epd_type_wave_residual: alpha, v > 0");
    const double t = 1.0;
    const double shift_exp = negative_control ? 0.5 * alpha : alpha;
    auto u = [&](double x, double s) {
        const double z = x - v * std::pow(s, shift_exp);
        return std::exp(-0.5 * z * z);
    };
    auto level = [&](double hh) {
        if (!(t - hh > 0.0)) throw GridError("epd_type_wave_residual: h >= t");
        double worst = 0.0;
        double scale = 0.0;
        const int n = std::max(opt.points, 2);
        for (int j = 0; j < n; ++j) {
            const double x = v + (-3.0 + 6.0 * j / (n - 1));
            const Fn1 in_t = [&](double s) { return u(x, s); };
            const Fn1 in_x = [&](double y) { return u(y, t); };
            const double res = d2(in_t, t, hh) + (1.0 - alpha) / t * d1(in_t, t, hh) -
                               v * v * alpha * alpha * std::pow(t, 2.0 * alpha - 2.0) *
                                   d2(in_x, x, hh);
            worst = std::max(worst, std::fabs(res));
            scale = std::max(scale, std::fabs(u(x, t)));
        }
        return worst / scale;
    };
    return study(negative_control ? "epd_type_wave_negative_control" : "epd_type_wave",
                 {{"alpha", alpha}, {"v", v}, {"t", t}}, h, opt, level);
}

ResidualReport epd_dalembert_residual(double xi, double c, double k, double t, double h,
                                      const ResidualOptions& opt) {
    const Fn1 f = [k](double y) { return std::cos(k * y); };
    auto level = [&](double hh) {
        if (!(t - hh > 0.0)) throw GridError("epd_dalembert_residual: h >= t");
        double worst = 0.0;
        double scale = 0.0;
        for (int j = 0; j < opt.points; ++j) {
            const double x = 2.0 * std::numbers::pi * j / (k * opt.points);
            const Fn1 in_t = [&](double s) { return epd_dalembert_1d(f, xi, c, x, s); };
            const Fn1 in_x = [&](double y) { return epd_dalembert_1d(f, xi, c, y, t); };
            const double res =
                d2(in_t, t, hh) + 2.0 * xi / t * d1(in_t, t, hh) - c * c * d2(in_x, x, hh);
            worst = std::max(worst, std::fabs(res));
            scale = std::max(scale, std::fabs(in_x(x)));
        }
        return worst / scale;
    };
    return study("epd_dalembert", {{"xi", xi}, {"c", c}, {"k", k}, {"t", t}}, h, opt, level);
}

Table residual_table(const std::vector<ResidualReport>& reports) {
    Table tab({"equation", "params", "level", "h", "max_residual", "order"});
    for (const auto& r : reports) {
        for (std::size_t i = 0; i < r.h.size(); ++i) {
            tab.add_row({r.equation, describe(r.params), static_cast<std::int64_t>(i), r.h[i],
                         r.max_residual[i], r.order});
        }
    }
    return tab;
}

bool SuiteReport::passed() const {
    return std::none_of(checks.begin(), checks.end(),
                        [](const CheckResult& c) { return c.status == "fail"; });
}

Table SuiteReport::checks_table() const {
    Table tab({"suite", "check", "status", "value", "tolerance", "detail"});
    for (const auto& c : checks) tab.add_row({suite, c.name, c.status, c.value, c.tolerance, c.detail});
    return tab;
}

std::string SuiteReport::to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["passed"] = passed();
    j["checks"] = nlohmann::ordered_json::parse(checks_table().to_json());
    nlohmann::ordered_json tabs = nlohmann::ordered_json::object();
    for (const auto& [name, tab] : tables) tabs[name] = nlohmann::ordered_json::parse(tab.to_json());
    j["tables"] = tabs;
    return j.dump(2) + "\n";
}

namespace {

struct Sink {
    SuiteReport& rep;

    // value <= tol passes.
    void bound(const std::string& name, double value, double tol, const std::string& detail = {}) {
        rep.checks.push_back({name, std::isfinite(value) && value <= tol ? "pass" : "fail", value,
                              tol, detail});
    }
    void flag(const std::string& name, bool ok, double value = 0.0, double tol = 0.0,
              const std::string& detail = {}) {
        rep.checks.push_back({name, ok ? "pass" : "fail", value, tol, detail});
    }
    void info(const std::string& name, double value, const std::string& detail = {}) {
        rep.checks.push_back({name, "info", value, 0.0, detail});
    }
    void skipped(const std::string& name, const std::string& detail) {
        rep.checks.push_back({name, "skipped", 0.0, 0.0, detail});
    }
};

std::string family_label(const FamilyParams& p) {
    return "alpha=" + fmt(p.alpha()) + " beta=" + fmt(p.beta_exp()) + " gamma=" +
           fmt(p.gamma_exp()) + " c=" + fmt(p.c()) + " d=" + std::to_string(p.dim());
}

// Parameter sets shared by the suites and the acceptance checks.
std::vector<FamilyParams> sets_1d() {
    return {FamilyParams(0.5, 2.0, 0.5, 2.0, 1), FamilyParams(1.0, 2.0, 1.0, 1.0, 1),
            FamilyParams(0.25, 1.5, 2.0, 1.7, 1), FamilyParams(0.7, 3.0, 2.5, 0.5, 1),
            FamilyParams(1.5, 1.0, 0.5, 1.0, 1)};
}

std::vector<FamilyParams> sets_radial() {
    return {FamilyParams(0.5, 2.0, 1.0, 1.0, 2), FamilyParams(1.0, 2.0, 2.0, 1.0, 3),
            FamilyParams(0.3, 3.0, 0.5, 2.0, 5), FamilyParams(1.5, 1.0, 2.5, 0.5, 2),
            FamilyParams(0.25, 1.5, 2.0, 1.2, 3)};
}

void suite_normalization(Sink& s, const SuiteConfig&) {
    Table tab({"alpha", "beta", "gamma", "c", "d", "mass", "error"});
    double worst = 0.0;
    int count = 0;
    for (double a : {0.3, 0.5, 1.0, 1.5})
        for (double b : {1.0, 1.5, 2.0, 3.0})
            for (double g : {0.5, 1.0, 2.5})
                for (double c : {0.5, 1.0, 2.0})
                    for (int d : {1, 2, 3, 5}) {
                        const FamilyParams p(a, b, g, c, d);
                        const double mass = total_mass(p, 1.0);
                        const double err = std::fabs(mass - 1.0);
                        worst = std::max(worst, err);
                        ++count;
                        tab.add_row({a, b, g, c, static_cast<std::int64_t>(d), mass, err});
                    }
    s.bound("unit mass over parameter grid (max |mass - 1|)", worst, 1e-8,
            std::to_string(count) + " families");
    s.rep.tables.emplace_back("normalization", std::move(tab));
}

void suite_representations(Sink& s, const SuiteConfig&) {
    double worst = 0.0;
    for (const auto& p : sets_1d()) {
        for (double t : {0.5, 0.8, 1.0, 1.5, 2.0}) {
            const double radius = support_radius(p, t);
            for (int i = 0; i < 20; ++i) {
                const double x = radius * (i + 0.5) / 20.5 * (i % 2 ? -1.0 : 1.0);
                const double u = pdf_at_radius(p, x, t);
                worst = std::max(worst, std::fabs(verify_prop1_identity(p, x, t)) / u);
            }
        }
    }
    s.bound("1-d velocity representation (max relative residual)", worst, 1e-12, "5 sets x 20 x 5");

    std::vector<FamilyParams> fams;
    for (int d : {2, 3, 4}) {
        fams.emplace_back(0.5, 2.0, 1.0, 1.0, d);
        fams.emplace_back(1.0, 1.5, 2.5, 2.0, d);
        fams.emplace_back(0.3, 3.0, 0.5, 0.5, d);
    }
    std::vector<double> fr;
    for (int i = 1; i <= 19; ++i) fr.push_back(0.05 * i);
    const Prop2Report rep = prop2_report(fams, fr, {0.5, 1.0, 2.0}, 1e-10);
    s.info("radial representation, stated prefactor (max relative residual)",
           rep.max_residual_paper_form);
    s.info("radial representation, prefactor with extra 1/r (max relative residual)",
           rep.max_residual_corrected_form);
    s.flag("radial representation: some variant matches pdf", rep.matching_variant != "none",
           std::min(rep.max_residual_paper_form, rep.max_residual_corrected_form), 1e-10,
           "matching variant: " + rep.matching_variant);
    Table tab({"d", "alpha", "beta", "gamma", "c", "r", "t", "residual_paper_form",
               "residual_corrected_form"});
    for (const auto& row : rep.rows) {
        tab.add_row({static_cast<std::int64_t>(row.d), row.alpha, row.beta, row.gamma, row.c, row.r,
                     row.t, row.residual_paper_form, row.residual_corrected_form});
    }
    s.rep.tables.emplace_back("radial_representation", std::move(tab));
}

void suite_transforms(Sink& s, const SuiteConfig& cfg) {
    const FamilyParams w = wigner_preset();
    double worst = 0.0;
    for (double t : {0.5, 1.0, 2.0}) {
        for (int i = 0; i <= 40; ++i) {
            const double z = 0.1 * std::pow(200.0, i / 40.0);  // xi t^(1/2) in [0.1, 20]
            const double xi = z / std::sqrt(t);
            const double ref = bessel_j(1.0, 2.0 * z) / z;
            worst = std::max(worst, std::fabs(char_fn_1d(w, xi, t) - ref));
        }
    }
    s.bound("semicircle transform vs J1(2z)/z", worst, 1e-8);

    worst = 0.0;
    for (int d : {2, 3, 4, 5}) {
        const FamilyParams p(0.5, 1.5, 1.5, 1.0, d);
        for (double xi : {0.3, 1.0, 4.0, 12.0}) {
            worst = std::max(worst, std::fabs(char_fn_radial(p, xi, 1.3) -
                                              char_fn_projection(p, xi, 1.3)));
        }
    }
    s.bound("Bessel route vs projection route", worst, 1e-8);

    worst = 0.0;
    for (double x : {0.05, 0.7, 3.0, 17.0}) {
        worst = std::max(worst, std::fabs(projection_cos_mean(3, x) - std::sin(x) / x));
    }
    s.bound("d=3 projection mean vs sin(x)/x", worst, 1e-10);

    worst = 0.0;
    for (double zeta : {-0.5, 0.0, 1.5})
        for (double mu : {0.3, 1.0, 2.5})
            for (double eta : {0.5, 1.0, 3.0})
                for (double x : {0.7, 2.0}) {
                    const double ref = std::exp(ln_gamma(zeta + 1.0) - ln_gamma(zeta + mu + 1.0));
                    const double v = ek_integral({zeta, mu, eta}, [](double) { return 1.0; }, x);
                    worst = std::max(worst, std::fabs(v - ref));
                }
    s.bound("Erdelyi-Kober of a constant", worst, 1e-10);

    worst = 0.0;
    for (const auto& p : sets_1d()) {
        for (double xi : {0.5, 2.0, 6.0}) {
            const double t = 1.2;
            const double ta = std::pow(t, p.alpha());
            const double b = p.beta_exp();
            const double g = p.gamma_exp();
            const double pre = std::exp(ln_gamma(1.0 / b + g + 1.0) - ln_gamma(1.0 / b));
            const double ek = pre * ek_integral({1.0 / b - 1.0, g + 1.0, b},
                                                [&](double v) { return std::cos(xi * v * ta); },
                                                p.c());
            worst = std::max(worst, std::fabs(ek - char_fn_1d(p, xi, t)));
        }
    }
    s.bound("Erdelyi-Kober of the cosine vs transform", worst, 1e-8);

    const Fn1 one = [](double) { return 1.0; };
    const Fn1 cosf = [](double y) { return std::cos(1.3 * y); };
    s.bound("EPD mean of a constant", std::fabs(epd_dalembert_1d(one, 0.6, 1.0, 0.3, 2.0) - 1.0), 1e-12);
    s.bound("EPD mean at t = 0", std::fabs(epd_dalembert_1d(cosf, 1.5, 1.0, 0.3, 0.0) - cosf(0.3)), 0.0);
    ResidualOptions opt;
    opt.levels = std::max(3, cfg.h_levels);
    const ResidualReport r = epd_dalembert_residual(1.5, 1.0, 1.0, 1.0, 0.1, opt);
    s.flag("EPD d'Alembert residual order", r.converges(), r.order, 0.0, "expected in [1.7, 2.3]");
    s.rep.tables.emplace_back("epd_dalembert", residual_table({r}));
}

void suite_presets(Sink& s, const SuiteConfig&) {
    double worst = 0.0;
    for (double nu : {1.5, 2.0, 3.0, 4.5})
        for (int d : {1, 2, 3}) worst = std::max(worst, std::fabs(epd_preset(nu, 1.7, d).first.C_rel_discrepancy));
    s.bound("EPD constant identity (max relative)", worst, 1e-12);
    const double x0[3] = {0.0, 0.0, 0.0};
    const double u0 = pdf(epd_preset(2.0, 1.0, 3).second, x0, 1.0);
    s.bound("EPD nu=2 d=3 u(0,1) = 15/(8 pi)", std::fabs(u0 / (15.0 / (8.0 * std::numbers::pi)) - 1.0), 1e-14);

    const FamilyParams w = wigner_preset();
    const double zero = 0.0;
    s.bound("Wigner u(0,1) = 1/pi", std::fabs(pdf(w, {&zero, 1}, 1.0) * std::numbers::pi - 1.0), 1e-14);
    worst = 0.0;
    for (double t : {0.5, 1.0, 2.0}) {
        const double radius = support_radius(w, t);
        for (int m = 0; m <= 5; ++m) {
            const double mom = integrate(
                [&](double x) { return 2.0 * std::pow(x, 2 * m) * pdf_at_radius(w, x, t); }, 0.0,
                radius);
            worst = std::max(worst, std::fabs(mom - catalan(m) * std::pow(t, m)));
        }
    }
    s.bound("Wigner even moments vs Catalan (quadrature)", worst, 1e-8);
    worst = 0.0;
    for (double t : {0.5, 1.0, 2.0, 3.7}) worst = std::max(worst, std::fabs(radial_moment(w, 2.0, t) - t));
    s.bound("Wigner mean squared displacement equals t", worst, 0.0);

    worst = 0.0;
    for (double a : {0.3, 0.5, 1.0, 1.5})
        for (double b : {1.0, 2.0, 3.0})
            for (int d : {1, 2, 3}) {
                const FamilyParams p(a, b, 1.5, 1.3, d);
                const double base = radial_moment(p, 2.0, 1.0);
                for (double t : {0.1, 0.5, 2.0, 10.0}) {
                    const double v = radial_moment(p, 2.0, t) / std::pow(t, 2.0 * a);
                    worst = std::max(worst, std::fabs(v / base - 1.0));
                }
            }
    s.bound("MSD / t^(2 alpha) independent of t", worst, 1e-12, "alpha from 0.3 to 1.5");

    const auto [ple3, fam3] = ple_preset(3.0, 1);
    s.bound("PLE p=3 d=1 mapping", std::max({std::fabs(ple3.k - 0.25), std::fabs(ple3.q - 1.0 / 6.0),
                                             std::fabs(fam3.beta_exp() - 1.5),
                                             std::fabs(fam3.gamma_exp() - 2.0),
                                             std::fabs(fam3.alpha() - 0.25)}),
            1e-15);
    worst = 0.0;
    double round_trip = 0.0;
    for (double p : {2.5, 3.0, 4.0, 6.0})
        for (int d : {1, 2, 3}) {
            const auto [pp, fam] = ple_preset(p, d);
            worst = std::max(worst, std::fabs(total_mass(fam, 1.0) - 1.0));
            round_trip = std::max(round_trip, std::fabs(pp.C / fam.norm_c() - 1.0));
        }
    s.bound("PLE unit mass", worst, 1e-8);
    s.bound("PLE constant round trip", round_trip, 1e-12);
    s.flag("PLE p close to 2 flagged", !ple_preset(2.01, 1).first.warning.empty());

    const auto [n2, nf2] = npme_preset(2.0, 2.0, 1);
    s.bound("NPME m=2 nu=2 d=1 mapping",
            std::max({std::fabs(n2.alpha - 1.0 / 3.0), std::fabs(n2.k - 1.0 / 6.0),
                      std::fabs(n2.gamma - 1.0), std::fabs(n2.c / std::sqrt(6.0) - 1.0)}),
            1e-14);
    worst = 0.0;
    double disc = 0.0;
    double lit = 0.0;
    for (double m : {1.5, 2.0, 3.0})
        for (double nu : {0.5, 1.0, 2.0})
            for (int d : {1, 2, 3}) {
                const auto [np, fam] = npme_preset(m, nu, d);
                worst = std::max(worst, std::fabs(total_mass(fam, 1.0) - 1.0));
                disc = std::max(disc, std::fabs(np.C_discrepancy));
                lit = std::max(lit, std::fabs(np.mass_residual_c_literal));
            }
    s.bound("NPME unit mass (c = k^(-1/nu))", worst, 1e-8);
    s.info("NPME closed-form C vs unit-mass C (max relative)", disc);
    s.info("NPME mass residual with c = k^(-2/nu) and closed-form C (max)", lit);

    const std::uint64_t cat[] = {1, 1, 2, 5, 14, 42};
    bool ok = true;
    for (int m = 0; m <= 5; ++m) ok = ok && catalan(m) == cat[m];
    s.flag("Catalan numbers C_0..C_5", ok);
}

void suite_fractional(Sink& s, const SuiteConfig&) {
    double worst = 0.0;
    for (double b : {0.0, 0.5, 1.0, 2.0, -0.3, -0.9})
        for (double nu : {0.1, 0.5, 0.9, 1.5})
            for (double t : {0.3, 1.0, 2.5}) {
                const double z = 1.0 + b - nu;
                if (z <= 0.0 && z == std::floor(z)) continue;
                const SignedLogGamma g = ln_gamma_signed(z);
                const double back = rl_power_rule(b, nu, t) * g.sign *
                                    std::exp(g.log_abs - ln_gamma(1.0 + b));
                worst = std::max(worst, std::fabs(back / std::pow(t, b - nu) - 1.0));
            }
    s.bound("power rule round trip", worst, 1e-13);

    Table tab({"nu", "x", "t", "residual"});
    worst = 0.0;
    for (double nu : {0.1, 0.2, 0.3}) {
        const FractionalParams fp = fractional_preset(nu);
        for (double t : {0.5, 1.0, 2.0}) {
            const double half = std::sqrt(fp.C1 / fp.C2) * std::pow(t, nu);
            for (int i = 0; i < 9; ++i) {
                const double x = half * (i - 4) / 5.0;
                const double r = fbe_residual(fp, x, t);
                worst = std::max(worst, std::fabs(r));
                tab.add_row({nu, x, t, r});
            }
        }
    }
    s.bound("fractional equation residual (max abs)", worst, 1e-12);
    s.rep.tables.emplace_back("fractional_residual", std::move(tab));

    bool rejected = false;
    try {
        (void)fractional_preset(0.25);
    } catch (const DomainError&) {
        rejected = true;
    }
    s.flag("nu = 1/4 rejected", rejected);
    const double c1 = fractional_preset(0.2).C1;
    const double ref = std::sin(0.2 * std::numbers::pi) / (2.0 * std::sin(0.4 * std::numbers::pi));
    s.bound("C1(0.2) vs sin(0.2 pi)/(2 sin(0.4 pi))", std::fabs(c1 - ref), 1e-12);

    std::vector<double> hs;
    std::vector<double> errs;
    for (int n : {64, 128, 256}) {
        RLGrid g{0.1, 1.0, n, 0.5};
        const double v = rl_derivative_numeric([](double x) { return x; }, g, 1.0);
        hs.push_back(g.step());
        errs.push_back(std::fabs(v - rl_power_rule(1.0, 0.5, 1.0)));
    }
    const double order = empirical_order(hs, errs);
    s.flag("Grunwald-Letnikov first-order convergence", std::fabs(order - 1.0) <= 0.3, order, 0.3);
}

void suite_pde(Sink& s, const SuiteConfig& cfg) {
    ResidualOptions opt;
    opt.levels = std::max(3, cfg.h_levels);
    opt.interior_fraction = cfg.interior_fraction;
    std::vector<ResidualReport> all;
    auto positive = [&](const ResidualReport& r) {
        s.flag(r.equation + " " + describe(r.params) + " order", r.converges(), r.order, 0.0,
               "expected in [1.7, 2.3]");
        all.push_back(r);
    };
    auto negative = [&](const ResidualReport& r) {
        const bool vanishes = r.converges() || r.max_residual.back() < 1e-6;
        s.flag(r.equation + " " + describe(r.params) + " rejected", !vanishes, r.max_residual.back(),
               0.0, "order " + fmt(r.order));
        all.push_back(r);
    };
    for (double m : {2.0, 3.0})
        for (int d : {1, 2, 3}) positive(pme_residual(m, d, 1.0, 0.04, opt));
    positive(pme_residual(3.0, 3, 2.0, 0.04, opt));
    negative(pme_residual(2.0, 1, 1.0, 0.04, opt, true));
    const ResidualReport mass = pme_residual_mass_normalized(2.0, 1, 1.0, 0.04, opt);
    s.info("pme with unit-mass amplitude: finest residual", mass.max_residual.back(),
           "the equation is nonlinear, so only the unit-amplitude profile solves it");
    all.push_back(mass);
    s.skipped("nonlocal porous medium nu < 2", "fractional gradient out of scope");

    positive(epd_residual(3.0, 1.0, 1, 1.0, 0.02, opt));
    positive(epd_residual(3.0, 2.0, 3, 1.0, 0.02, opt));
    negative(epd_residual(3.0, 1.0, 1, 1.0, 0.02, opt, true));

    for (double a : {1.0 / 3.0, 0.5, 1.0}) positive(epd_type_wave_residual(a, 0.75, 0.05, opt));
    negative(epd_type_wave_residual(1.0 / 3.0, 0.75, 0.05, opt, true));

    positive(epd_dalembert_residual(1.5, 1.0, 1.0, 1.0, 0.1, opt));
    s.rep.tables.emplace_back("convergence", residual_table(all));
}

void suite_sampling(Sink& s, const SuiteConfig& cfg) {
    const RngStream root(cfg.seed, cfg.stream);
    const std::size_t n = cfg.n_samples;
    const ParallelSchedule sched{4096, cfg.threads};
    const double t = 1.3;
    std::uint64_t idx = 0;

    for (const auto& p : sets_1d()) {
        auto xs = parallel_generate<double>(root.substream(idx++), n,
                                            [&](RngStream& r) { return sample_position_1d(r, p, t); },
                                            sched);
        std::sort(xs.begin(), xs.end());
        const KSResult ks = ks_test(xs, [&](double x) { return cdf_1d(p, x, t); }, 0.01);
        s.flag("KS 1-d position " + family_label(p), ks.pass, ks.statistic, ks.critical_value);
    }
    for (const auto& p : sets_radial()) {
        auto rs = parallel_generate<double>(
            root.substream(idx++), n,
            [&](RngStream& r) {
                const auto x = sample_position(r, p, t);
                double ss = 0.0;
                for (double v : x) ss += v * v;
                return std::sqrt(ss);
            },
            sched);
        std::sort(rs.begin(), rs.end());
        const KSResult ks = ks_test(rs, [&](double a) { return ball_probability(p, a, t); }, 0.01);
        s.flag("KS radius " + family_label(p), ks.pass, ks.statistic, ks.critical_value);
    }
    for (const auto& p : {sets_1d()[0], sets_radial()[1]}) {
        auto r2 = parallel_generate<double>(
            root.substream(idx++), n,
            [&](RngStream& r) {
                const auto x = sample_position(r, p, t);
                double ss = 0.0;
                for (double v : x) ss += v * v;
                return ss;
            },
            sched);
        double mean = 0.0;
        for (double v : r2) mean += v;
        mean /= n;
        const double m2 = radial_moment(p, 2.0, t);
        const double sd = std::sqrt((radial_moment(p, 4.0, t) - m2 * m2) / n);
        s.bound("Monte Carlo MSD within 3 sigma " + family_label(p), std::fabs(mean - m2) / sd, 3.0);
    }
    {
        auto ws = parallel_generate<double>(root.substream(idx++), n,
                                            [](RngStream& r) { return sample_projection_w(r, 3); },
                                            sched);
        std::sort(ws.begin(), ws.end());
        const KSResult ks = ks_test(ws, [](double w) { return std::clamp(w, 0.0, 1.0); }, 0.01);
        s.flag("KS projection law d=3 vs uniform", ks.pass, ks.statistic, ks.critical_value);
    }

    // Telegraph process against the velocity sampler of the matching family.
    const double xi = 2.0;
    const auto [ep, fam] = epd_preset(xi, 1.0, 1);
    auto oracle = parallel_generate<double>(root.substream(idx++), n,
                                            [&](RngStream& r) { return sample_position_1d(r, fam, 1.0); },
                                            sched);
    std::sort(oracle.begin(), oracle.end());
    const RngStream tele_root = root.substream(idx++);
    std::vector<double> dist;
    Table tab({"eps", "ks_distance", "ks_distance_exact_cdf", "mean_flips", "expected_flips"});
    for (double eps : {1e-3, 1e-4, 1e-6}) {
        auto paths = parallel_generate<TelegraphPath>(
            tele_root, n, [&](RngStream& r) { return sample_epd_telegraph_path(r, xi, 1.0, 1.0, eps); },
            sched);
        std::vector<double> v(n);
        double flips = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = paths[i].value;
            flips += static_cast<double>(paths[i].flips);
        }
        std::sort(v.begin(), v.end());
        const double ks2 = ks_test_two_sample(v, oracle, 0.01).statistic;
        const double ks1 = ks_test(v, [&](double x) { return cdf_1d(fam, x, 1.0); }, 0.01).statistic;
        dist.push_back(ks2);
        tab.add_row({eps, ks2, ks1, flips / n, xi * std::log(1.0 / eps)});
    }
    s.bound("telegraph KS distance at eps=1e-6", dist.back(), 0.02);
    s.flag("telegraph KS distance nonincreasing in eps", dist[1] <= dist[0] && dist[2] <= dist[1],
           dist[2] - dist[0], 0.0,
           "distances " + fmt(dist[0]) + ", " + fmt(dist[1]) + ", " + fmt(dist[2]));
    s.rep.tables.emplace_back("telegraph", std::move(tab));

    const FamilyParams p0 = sets_1d()[0];
    auto gen = [&](RngStream& r) { return sample_position_1d(r, p0, t); };
    const auto a = parallel_generate<double>(root.substream(999), 20000, gen, sched);
    const auto b = parallel_generate<double>(root.substream(999), 20000, gen, {4096, 1});
    s.flag("sampling reproducible for a fixed (seed, stream)", a == b);
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"normalization", "representations", "transforms",
                                                   "presets",       "fractional",      "pde",
                                                   "sampling"};
    return names;
}

bool is_suite(const std::string& name) {
    const auto& n = suite_names();
    return std::find(n.begin(), n.end(), name) != n.end();
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg) {
    if (!is_suite(name)) throw DomainError("unknown suite: " + name);
    SuiteReport rep;
    rep.suite = name;
    Sink s{rep};
    if (name == "normalization") suite_normalization(s, cfg);
    else if (name == "representations") suite_representations(s, cfg);
    else if (name == "transforms") suite_transforms(s, cfg);
    else if (name == "presets") suite_presets(s, cfg);
    else if (name == "fractional") suite_fractional(s, cfg);
    else if (name == "pde") suite_pde(s, cfg);
    else suite_sampling(s, cfg);
    return rep;
}

} // namespace barenblatt
