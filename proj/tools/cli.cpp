#include "cli.hpp"

#include "barenblatt/errors.hpp"
#include "barenblatt/family.hpp"
#include "barenblatt/presets.hpp"
#include "barenblatt/report.hpp"
#include "barenblatt/sampling.hpp"
#include "barenblatt/transforms.hpp"
#include "barenblatt/verify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>

namespace barenblatt::cli {

namespace {

// Relative output paths are resolved against this directory when it is set.
constexpr const char* kOutDirEnv = "BARENBLATT_OUT_DIR";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FamilyOpts {
    std::string preset;
    std::optional<double> alpha, beta, gamma, c;
    std::optional<int> d;
    std::optional<double> nu, m, p;
};

struct OutputOpts {
    std::string format = "csv";
    std::string output;
};

void add_family_options(CLI::App* sub, FamilyOpts& f) {
    sub->add_option("--preset", f.preset, "Named family: wigner, epd, ple, npme")
        ->check(CLI::IsMember({"wigner", "epd", "ple", "npme"}));
    sub->add_option("--alpha", f.alpha, "Time exponent alpha > 0");
    sub->add_option("--beta", f.beta, "Profile exponent beta > 0");
    sub->add_option("--gamma", f.gamma, "Outer exponent gamma > 0");
    sub->add_option("--c", f.c, "Support constant c > 0 (also the epd speed)");
    sub->add_option("--d", f.d, "Space dimension d >= 1");
    sub->add_option("--nu", f.nu, "epd: nu > 1; npme: nu in (0, 2]");
    sub->add_option("--m", f.m, "npme: m > 1");
    sub->add_option("--p", f.p, "ple: p > 2");
}

void add_output_options(CLI::App* sub, OutputOpts& o) {
    sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output,-o", o.output, "Write to this file instead of stdout");
}

FamilyParams resolve_family(const FamilyOpts& f) {
    const bool explicit_any = f.alpha || f.beta || f.gamma;
    if (f.preset.empty()) {
        if (!(f.alpha && f.beta && f.gamma && f.c)) {
            throw UsageError("give either --preset or all of --alpha, --beta, --gamma, --c");
        }
        if (f.nu || f.m || f.p) throw UsageError("--nu, --m and --p need --preset");
        return FamilyParams(*f.alpha, *f.beta, *f.gamma, *f.c, f.d.value_or(1));
    }
    if (explicit_any) {
        throw UsageError("--preset cannot be combined with --alpha, --beta or --gamma");
    }
    if (f.preset == "wigner") {
        if (f.d.value_or(1) != 1 || f.c || f.nu || f.m || f.p) {
            throw UsageError("--preset wigner takes no parameters");
        }
        return wigner_preset();
    }
    if (f.preset == "epd") {
        if (!f.nu) throw UsageError("--preset epd requires --nu");
        return epd_preset(*f.nu, f.c.value_or(1.0), f.d.value_or(1)).second;
    }
    if (f.preset == "ple") {
        if (!f.p) throw UsageError("--preset ple requires --p");
        return ple_preset(*f.p, f.d.value_or(1)).second;
    }
    if (!f.m) throw UsageError("--preset npme requires --m");
    return npme_preset(*f.m, f.nu.value_or(2.0), f.d.value_or(1)).second;
}

std::vector<double> parse_grid(const std::string& spec, const std::string& flag) {
    const auto p1 = spec.find(':');
    const auto p2 = p1 == std::string::npos ? p1 : spec.find(':', p1 + 1);
    if (p2 == std::string::npos) throw UsageError(flag + ": expected min:max:count, got '" + spec + "'");
    double lo = 0.0;
    double hi = 0.0;
    long count = 0;
    try {
        std::size_t used = 0;
        lo = std::stod(spec.substr(0, p1), &used);
        hi = std::stod(spec.substr(p1 + 1, p2 - p1 - 1), &used);
        count = std::stol(spec.substr(p2 + 1), &used);
    } catch (const std::exception&) {
        throw UsageError(flag + ": cannot parse '" + spec + "'");
    }
    if (count < 1) throw UsageError(flag + ": empty grid '" + spec + "'");
    if (!std::isfinite(lo) || !std::isfinite(hi)) throw UsageError(flag + ": bounds must be finite");
    std::vector<double> v;
    for (long i = 0; i < count; ++i) {
        v.push_back(count == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / (count - 1));
    }
    return v;
}

std::filesystem::path resolve_path(const std::string& path) {
    std::filesystem::path p(path);
    if (p.is_relative()) {
        if (const char* dir = std::getenv(kOutDirEnv); dir && *dir) p = std::filesystem::path(dir) / p;
    }
    return p;
}

void write_text(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    const auto p = resolve_path(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream f(p, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + p.string() + " for writing");
    f << text;
}

void emit(const Table& tab, const OutputOpts& o, std::ostream& out) {
    write_text(o.format == "json" ? tab.to_json() : tab.to_csv(), o.output, out);
}

struct EvalOpts {
    FamilyOpts fam;
    OutputOpts out;
    double t = 1.0;
    std::vector<std::string> grids;
    bool cdf = false;
};

void cmd_eval(const EvalOpts& o, std::ostream& out) {
    const FamilyParams p = resolve_family(o.fam);
    const int d = p.dim();
    std::vector<std::vector<double>> axes;
    for (const auto& g : o.grids) axes.push_back(parse_grid(g, "--grid"));
    if (axes.size() != 1 && static_cast<int>(axes.size()) != d) {
        throw UsageError("--grid: give one grid (along the first axis) or one per dimension");
    }
    const bool tensor = axes.size() > 1;
    std::vector<std::string> cols;
    if (tensor) {
        for (int i = 0; i < d; ++i) cols.push_back("x" + std::to_string(i + 1));
    } else {
        cols.push_back("x");
    }
    cols.insert(cols.end(), {"t", "pdf"});
    if (o.cdf) cols.push_back("cdf");
    Table tab(cols);
    std::vector<double> x(static_cast<std::size_t>(d), 0.0);
    std::vector<std::size_t> idx(axes.size(), 0);
    for (;;) {
        double r2 = 0.0;
        for (std::size_t a = 0; a < axes.size(); ++a) {
            x[a] = axes[a][idx[a]];
            r2 += x[a] * x[a];
        }
        std::vector<Cell> row;
        for (std::size_t a = 0; a < axes.size(); ++a) row.emplace_back(x[a]);
        row.emplace_back(o.t);
        row.emplace_back(pdf(p, x, o.t));
        if (o.cdf) {
            row.emplace_back(d == 1 ? cdf_1d(p, x[0], o.t) : ball_probability(p, std::sqrt(r2), o.t));
        }
        tab.add_row(std::move(row));
        std::size_t a = axes.size();
        while (a > 0) {
            --a;
            if (++idx[a] < axes[a].size()) break;
            idx[a] = 0;
            if (a == 0) {
                emit(tab, o.out, out);
                return;
            }
        }
    }
}

struct SampleOpts {
    FamilyOpts fam;
    OutputOpts out;
    double t = 1.0;
    long long n = 0;
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
    unsigned threads = 1;
};

void cmd_sample(const SampleOpts& o, std::ostream& out) {
    const FamilyParams p = resolve_family(o.fam);
    if (o.n < 1) throw UsageError("--n must be >= 1");
    const RngStream root(o.seed, o.stream);
    const auto xs = parallel_generate<std::vector<double>>(
        root, static_cast<std::size_t>(o.n),
        [&](RngStream& r) { return sample_position(r, p, o.t); }, {4096, o.threads});
    std::vector<std::string> cols;
    if (p.dim() == 1) {
        cols.push_back("x");
    } else {
        for (int i = 0; i < p.dim(); ++i) cols.push_back("x" + std::to_string(i + 1));
    }
    Table tab(cols);
    for (const auto& x : xs) tab.add_row(std::vector<Cell>(x.begin(), x.end()));
    emit(tab, o.out, out);
}

struct PresetsOpts {
    FamilyOpts fam;
    OutputOpts out;
};

void cmd_presets(const PresetsOpts& o, std::ostream& out) {
    Table tab({"preset", "params", "alpha", "beta", "gamma", "c", "C", "d"});
    auto row = [&](const std::string& name, const std::string& params, const FamilyParams& f) {
        tab.add_row({name, params, f.alpha(), f.beta_exp(), f.gamma_exp(), f.c(), f.norm_c(),
                     static_cast<std::int64_t>(f.dim())});
    };
    auto str = [](double v) { return format_real(v); };
    if (!o.fam.preset.empty()) {
        const FamilyParams f = resolve_family(o.fam);
        std::string params;
        if (o.fam.nu) params += "nu=" + str(*o.fam.nu) + ";";
        if (o.fam.m) params += "m=" + str(*o.fam.m) + ";";
        if (o.fam.p) params += "p=" + str(*o.fam.p) + ";";
        if (o.fam.c) params += "c=" + str(*o.fam.c) + ";";
        if (!params.empty()) params.pop_back();
        row(o.fam.preset, params, f);
    } else {
        row("wigner", "", wigner_preset());
        for (int d : {1, 2, 3}) row("epd", "nu=2;c=1", epd_preset(2.0, 1.0, d).second);
        for (int d : {1, 2, 3}) row("ple", "p=3", ple_preset(3.0, d).second);
        for (int d : {1, 2, 3}) row("npme", "m=2;nu=2", npme_preset(2.0, 2.0, d).second);
        for (int d : {1, 2, 3}) row("npme", "m=2;nu=1", npme_preset(2.0, 1.0, d).second);
    }
    emit(tab, o.out, out);
}

struct FtOpts {
    FamilyOpts fam;
    OutputOpts out;
    double t = 1.0;
    std::string xi_grid;
};

void cmd_ft(const FtOpts& o, std::ostream& out) {
    const FamilyParams p = resolve_family(o.fam);
    const auto xis = parse_grid(o.xi_grid, "--xi");
    if (p.dim() == 1) {
        Table tab({"xi", "t", "cf"});
        for (double xi : xis) tab.add_row({xi, o.t, char_fn_1d(p, xi, o.t)});
        emit(tab, o.out, out);
        return;
    }
    Table tab({"xi", "t", "cf_radial", "cf_projection"});
    for (double xi : xis) {
        tab.add_row({xi, o.t, char_fn_radial(p, xi, o.t), char_fn_projection(p, xi, o.t)});
    }
    emit(tab, o.out, out);
}

struct MsdOpts {
    FamilyOpts fam;
    OutputOpts out;
    std::string t_grid;
    long long n = 0;
    std::optional<std::uint64_t> seed;
    std::uint64_t stream = 0;
    unsigned threads = 1;
};

void cmd_msd(const MsdOpts& o, std::ostream& out) {
    const FamilyParams p = resolve_family(o.fam);
    const auto ts = parse_grid(o.t_grid, "--t-grid");
    if (o.n > 0 && !o.seed) throw UsageError("--n needs --seed");
    std::vector<std::string> cols = {"t", "msd", "msd_over_t2alpha"};
    if (o.n > 0) cols.insert(cols.end(), {"msd_mc", "msd_mc_stderr"});
    Table tab(cols);
    const RngStream root(o.seed.value_or(0), o.stream);
    std::uint64_t k = 0;
    for (double t : ts) {
        const double m2 = radial_moment(p, 2.0, t);
        std::vector<Cell> row = {t, m2, m2 / std::pow(t, 2.0 * p.alpha())};
        if (o.n > 0) {
            const auto r2 = parallel_generate<double>(
                root.substream(k++), static_cast<std::size_t>(o.n),
                [&](RngStream& r) {
                    const double v = sample_radius(r, p, t);
                    return v * v;
                },
                {4096, o.threads});
            double mean = 0.0;
            for (double v : r2) mean += v;
            mean /= static_cast<double>(r2.size());
            double var = 0.0;
            for (double v : r2) var += (v - mean) * (v - mean);
            var /= static_cast<double>(r2.size() > 1 ? r2.size() - 1 : 1);
            row.emplace_back(mean);
            row.emplace_back(std::sqrt(var / static_cast<double>(r2.size())));
        }
        tab.add_row(std::move(row));
    }
    emit(tab, o.out, out);
}

struct VerifyOpts {
    OutputOpts out;
    std::string suite;
    SuiteConfig cfg;
    std::string tables_dir;
};

int cmd_verify(const VerifyOpts& o, std::ostream& out) {
    const SuiteReport rep = run_suite(o.suite, o.cfg);
    write_text(o.out.format == "json" ? rep.to_json() : rep.checks_table().to_csv(), o.out.output, out);
    if (!o.tables_dir.empty()) {
        for (const auto& [name, tab] : rep.tables) {
            const std::string file = (std::filesystem::path(o.tables_dir) / (o.suite + "_" + name + ".csv")).string();
            write_text(tab.to_csv(), file, out);
        }
    }
    return rep.passed() ? kExitOk : kExitCheckFailed;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Compactly supported self-similar densities: evaluation, sampling and checks",
                 "barenblatt"};
    app.require_subcommand(1);

    EvalOpts eval;
    auto* s_eval = app.add_subcommand("eval", "Evaluate pdf (and optionally the cdf) on a grid");
    add_family_options(s_eval, eval.fam);
    add_output_options(s_eval, eval.out);
    s_eval->add_option("--t", eval.t, "Time t > 0")->required();
    s_eval->add_option("--grid", eval.grids, "min:max:count, once or once per dimension")->required();
    s_eval->add_flag("--cdf", eval.cdf, "Add the cdf column (ball probability for d >= 2)");

    SampleOpts sample;
    auto* s_sample = app.add_subcommand("sample", "Draw positions X(t)");
    add_family_options(s_sample, sample.fam);
    add_output_options(s_sample, sample.out);
    s_sample->add_option("--t", sample.t, "Time t > 0")->required();
    s_sample->add_option("--n", sample.n, "Number of samples")->required();
    s_sample->add_option("--seed", sample.seed, "64-bit seed")->required();
    s_sample->add_option("--stream", sample.stream, "64-bit stream id");
    s_sample->add_option("--threads", sample.threads, "Worker threads (output does not depend on it)");

    PresetsOpts presets;
    auto* s_presets = app.add_subcommand("presets", "Print preset parameter mappings");
    add_family_options(s_presets, presets.fam);
    add_output_options(s_presets, presets.out);

    FtOpts ft;
    auto* s_ft = app.add_subcommand("ft", "Characteristic function on a grid of |xi|");
    add_family_options(s_ft, ft.fam);
    add_output_options(s_ft, ft.out);
    s_ft->add_option("--t", ft.t, "Time t > 0")->required();
    s_ft->add_option("--xi", ft.xi_grid, "min:max:count")->required();

    MsdOpts msd;
    auto* s_msd = app.add_subcommand("msd", "Mean squared displacement over a time grid");
    add_family_options(s_msd, msd.fam);
    add_output_options(s_msd, msd.out);
    s_msd->add_option("--t-grid", msd.t_grid, "min:max:count")->required();
    s_msd->add_option("--n", msd.n, "Add a Monte Carlo estimate from n samples per time");
    s_msd->add_option("--seed", msd.seed, "64-bit seed (required with --n)");
    s_msd->add_option("--stream", msd.stream, "64-bit stream id");
    s_msd->add_option("--threads", msd.threads, "Worker threads");

    VerifyOpts verify;
    auto* s_verify = app.add_subcommand("verify", "Run a verification suite");
    add_output_options(s_verify, verify.out);
    s_verify->add_option("suite", verify.suite, "Suite name")
        ->required()
        ->check(CLI::IsMember(suite_names()));
    s_verify->add_option("--h-levels", verify.cfg.h_levels, "Dyadic refinement levels (>= 3)")
        ->check(CLI::Range(3, 12));
    s_verify->add_option("--seed", verify.cfg.seed, "64-bit seed");
    s_verify->add_option("--stream", verify.cfg.stream, "64-bit stream id");
    s_verify->add_option("--n", verify.cfg.n_samples, "Samples per sampling check")
        ->check(CLI::Range(static_cast<std::size_t>(10), static_cast<std::size_t>(100000000)));
    s_verify->add_option("--threads", verify.cfg.threads, "Worker threads");
    s_verify->add_option("--interior-fraction", verify.cfg.interior_fraction,
                         "Residual points satisfy |x| <= fraction * r(t)")
        ->check(CLI::Range(0.05, 0.95));
    s_verify->add_option("--tables", verify.tables_dir, "Directory for the suite's CSV tables");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*s_eval) cmd_eval(eval, out);
        else if (*s_sample) cmd_sample(sample, out);
        else if (*s_presets) cmd_presets(presets, out);
        else if (*s_ft) cmd_ft(ft, out);
        else if (*s_msd) cmd_msd(msd, out);
        else return cmd_verify(verify, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitOk;
}

} // namespace barenblatt::cli
