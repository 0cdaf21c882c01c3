#include "barenblatt/errors.hpp"
#include "barenblatt/family.hpp"
#include "barenblatt/presets.hpp"
#include "barenblatt/sampling.hpp"
#include "barenblatt/transforms.hpp"
#include "barenblatt/verify.hpp"

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace barenblatt;

namespace {

py::array_t<double> sample(const FamilyParams& p, double t, std::size_t n, std::uint64_t seed,
                           std::uint64_t stream, unsigned threads) {
    const RngStream root(seed, stream);
    const ParallelSchedule sched{4096, threads};
    const int d = p.dim();
    std::vector<std::vector<double>> rows;
    {
        py::gil_scoped_release release;
        rows = parallel_generate<std::vector<double>>(
            root, n, [&](RngStream& r) { return sample_position(r, p, t); }, sched);
    }
    py::array_t<double> out(d == 1 ? std::vector<py::ssize_t>{static_cast<py::ssize_t>(n)}
                                   : std::vector<py::ssize_t>{static_cast<py::ssize_t>(n), d});
    double* buf = out.mutable_data();
    for (std::size_t i = 0; i < n; ++i)
        for (int k = 0; k < d; ++k) buf[i * d + k] = rows[i][k];
    return out;
}

py::dict epd_dict(const EPDParams& e) {
    py::dict d;
    d["nu"] = e.nu;
    d["c"] = e.c;
    d["d"] = e.d;
    d["C_closed_form"] = e.C_closed_form;
    d["C_family"] = e.C_family;
    d["C_rel_discrepancy"] = e.C_rel_discrepancy;
    return d;
}

py::dict ple_dict(const PLEParams& e) {
    py::dict d;
    d["p"] = e.p;
    d["d"] = e.d;
    d["k"] = e.k;
    d["q"] = e.q;
    d["frak_c"] = e.frak_c;
    d["C"] = e.C;
    d["c"] = e.c;
    d["warning"] = e.warning;
    return d;
}

py::dict npme_dict(const NPMEParams& e) {
    py::dict d;
    d["m"] = e.m;
    d["nu"] = e.nu;
    d["d"] = e.d;
    d["alpha"] = e.alpha;
    d["k"] = e.k;
    d["gamma"] = e.gamma;
    d["c"] = e.c;
    d["c_literal"] = e.c_literal;
    d["C_printed"] = e.C_printed;
    d["C_normalized"] = e.C_normalized;
    d["C_discrepancy"] = e.C_discrepancy;
    d["mass_residual_c"] = e.mass_residual_c;
    d["mass_residual_c_literal"] = e.mass_residual_c_literal;
    return d;
}

} // namespace

PYBIND11_MODULE(_barenblatt, m) {
    m.doc() = "Self-similar compactly supported densities";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    py::class_<FamilyParams>(m, "FamilyParams")
        .def(py::init<double, double, double, double, int>(), py::arg("alpha"), py::arg("beta"),
             py::arg("gamma"), py::arg("c"), py::arg("d"))
        .def_property_readonly("alpha", &FamilyParams::alpha)
        .def_property_readonly("beta", &FamilyParams::beta_exp)
        .def_property_readonly("gamma", &FamilyParams::gamma_exp)
        .def_property_readonly("c", &FamilyParams::c)
        .def_property_readonly("d", &FamilyParams::dim)
        .def_property_readonly("C", &FamilyParams::norm_c)
        .def("__repr__", [](const FamilyParams& p) {
            return "FamilyParams(alpha=" + format_real(p.alpha()) + ", beta=" + format_real(p.beta_exp()) +
                   ", gamma=" + format_real(p.gamma_exp()) + ", c=" + format_real(p.c()) +
                   ", d=" + std::to_string(p.dim()) + ")";
        });

    m.def("support_radius", &support_radius, py::arg("params"), py::arg("t"));
    m.def("pdf_at_radius", &pdf_at_radius, py::arg("params"), py::arg("r"), py::arg("t"));
    m.def("pdf", [](const FamilyParams& p, std::vector<double> x, double t) { return pdf(p, x, t); },
          py::arg("params"), py::arg("x"), py::arg("t"));
    m.def("radial_pdf", &radial_pdf, py::arg("params"), py::arg("r"), py::arg("t"));
    m.def("ball_probability", &ball_probability, py::arg("params"), py::arg("a"), py::arg("t"));
    m.def("cdf_1d", &cdf_1d, py::arg("params"), py::arg("x"), py::arg("t"));
    m.def("quantile_1d", &quantile_1d, py::arg("params"), py::arg("q"), py::arg("t"));
    m.def("radial_moment", &radial_moment, py::arg("params"), py::arg("k"), py::arg("t"));
    m.def("total_mass", [](const FamilyParams& p, double t) { return total_mass(p, t); }, py::arg("params"),
          py::arg("t"));

    m.def("char_fn_1d", [](const FamilyParams& p, double xi, double t) { return char_fn_1d(p, xi, t); },
          py::arg("params"), py::arg("xi"), py::arg("t"));
    m.def("char_fn_radial", [](const FamilyParams& p, double xi, double t) { return char_fn_radial(p, xi, t); },
          py::arg("params"), py::arg("xi"), py::arg("t"));
    m.def("char_fn_projection",
          [](const FamilyParams& p, double xi, double t) { return char_fn_projection(p, xi, t); },
          py::arg("params"), py::arg("xi"), py::arg("t"));

    m.def("wigner_preset", &wigner_preset);
    m.def("epd_preset", [](double nu, double c, int d) {
        auto [e, f] = epd_preset(nu, c, d);
        return py::make_tuple(epd_dict(e), f);
    }, py::arg("nu"), py::arg("c"), py::arg("d"));
    m.def("ple_preset", [](double p, int d) {
        auto [e, f] = ple_preset(p, d);
        return py::make_tuple(ple_dict(e), f);
    }, py::arg("p"), py::arg("d"));
    m.def("npme_preset", [](double mm, double nu, int d) {
        auto [e, f] = npme_preset(mm, nu, d);
        return py::make_tuple(npme_dict(e), f);
    }, py::arg("m"), py::arg("nu"), py::arg("d"));
    m.def("catalan", &catalan, py::arg("m"));

    m.def("sample", &sample, py::arg("params"), py::arg("t"), py::arg("n"), py::arg("seed"),
          py::arg("stream") = 0, py::arg("threads") = 1,
          "Positions X(t); shape (n,) for d = 1 and (n, d) otherwise.");

    m.def("suite_names", &suite_names);
    m.def("run_suite", [](const std::string& name, std::uint64_t seed, std::uint64_t stream,
                          std::size_t n_samples, unsigned threads) {
        SuiteConfig cfg;
        cfg.seed = seed;
        cfg.stream = stream;
        cfg.n_samples = n_samples;
        cfg.threads = threads;
        py::gil_scoped_release release;
        return run_suite(name, cfg).to_json();
    }, py::arg("name"), py::arg("seed") = SuiteConfig{}.seed, py::arg("stream") = 0,
          py::arg("n_samples") = SuiteConfig{}.n_samples, py::arg("threads") = 1,
          "Runs a verification suite and returns its JSON report.");
}
