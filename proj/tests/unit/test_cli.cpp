#include "cli.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = barenblatt::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);)
        if (!l.empty()) v.push_back(l);
    return v;
}

std::vector<double> column(const std::string& csv, std::size_t col) {
    std::vector<double> v;
    const auto ls = lines(csv);
    for (std::size_t i = 1; i < ls.size(); ++i) {
        std::istringstream in(ls[i]);
        std::string cell;
        for (std::size_t c = 0; c <= col; ++c) std::getline(in, cell, ',');
        v.push_back(std::strtod(cell.c_str(), nullptr));
    }
    return v;
}

} // namespace

using barenblatt::cli::kExitCheckFailed;
using barenblatt::cli::kExitOk;
using barenblatt::cli::kExitUsage;

TEST_CASE("eval output") {
    const auto r = run({"eval", "--preset", "wigner", "--t", "1", "--grid", "-2:2:5", "--cdf"});
    REQUIRE(r.code == kExitOk);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 6u);
    CHECK(ls[0] == "x,t,pdf,cdf");
    const auto pdf = column(r.out, 2);
    CHECK(pdf[2] == doctest::Approx(1.0 / 3.141592653589793).epsilon(1e-15));
    CHECK(pdf[0] == 0.0);
    CHECK(pdf[4] == 0.0);
    const auto cdf = column(r.out, 3);
    CHECK(cdf[2] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(cdf[4] == 1.0);

    const auto t2 = run({"eval", "--alpha", "0.5", "--beta", "2", "--gamma", "1", "--c", "1", "--d", "2",
                         "--t", "1", "--grid", "-1:1:3", "--grid", "0:0:1"});
    REQUIRE(t2.code == kExitOk);
    CHECK(lines(t2.out)[0] == "x1,x2,t,pdf");
    CHECK(lines(t2.out).size() == 4u);
}

TEST_CASE("usage errors") {
    CHECK(run({"eval", "--preset", "wigner", "--t", "1", "--grid", "0:1:0"}).code == kExitUsage);
    CHECK(run({"eval", "--preset", "wigner", "--alpha", "0.5", "--t", "1", "--grid", "0:1:3"}).code ==
          kExitUsage);
    CHECK(run({"sample", "--preset", "wigner", "--t", "1", "--n", "10"}).code == kExitUsage);
    CHECK(run({"verify", "nosuch"}).code == kExitUsage);
    CHECK(run({"nosuch"}).code == kExitUsage);
    CHECK(run({"eval", "--alpha", "-1", "--beta", "2", "--gamma", "1", "--c", "1", "--d", "1", "--t", "1",
               "--grid", "0:1:2"})
              .code == kExitUsage);
    CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("sample output is reproducible") {
    const std::vector<std::string> base = {"sample", "--preset", "wigner", "--t", "1",
                                           "--n",    "100000", "--seed",   "7"};
    auto a = base;
    a.insert(a.end(), {"--threads", "1"});
    auto b = base;
    b.insert(b.end(), {"--threads", "4"});
    const auto ra = run(a);
    const auto rb = run(b);
    REQUIRE(ra.code == kExitOk);
    CHECK(ra.out == rb.out);
    CHECK(lines(ra.out)[0] == "x");
    const auto x = column(ra.out, 0);
    REQUIRE(x.size() == 100000u);
    double s2 = 0.0, s4 = 0.0;
    for (double v : x) {
        CHECK_UNARY(std::fabs(v) < 2.0);
        s2 += v * v;
        s4 += v * v * v * v;
    }
    const double n = static_cast<double>(x.size());
    const double m2 = s2 / n;
    CHECK(std::fabs(m2 - 1.0) <= 3.0 * std::sqrt((s4 / n - m2 * m2) / n));

    auto c = base;
    c.insert(c.end(), {"--stream", "1"});
    CHECK(run(c).out != ra.out);
}

TEST_CASE("other subcommands") {
    const auto p = run({"presets"});
    REQUIRE(p.code == kExitOk);
    CHECK(lines(p.out)[0] == "preset,params,alpha,beta,gamma,c,C,d");

    const auto f = run({"ft", "--preset", "wigner", "--t", "1", "--xi", "0:2:3"});
    REQUIRE(f.code == kExitOk);
    CHECK(lines(f.out)[0] == "xi,t,cf");
    CHECK(column(f.out, 2)[0] == doctest::Approx(1.0).epsilon(1e-14));

    const auto fj = run({"ft", "--alpha", "0.5", "--beta", "2", "--gamma", "1", "--c", "1", "--d", "3",
                         "--t", "1", "--xi", "0:2:3", "--format", "json"});
    REQUIRE(fj.code == kExitOk);
    CHECK(fj.out.find("\"cf_projection\"") != std::string::npos);

    const auto m = run({"msd", "--preset", "wigner", "--t-grid", "0.5:2:4"});
    REQUIRE(m.code == kExitOk);
    CHECK(lines(m.out)[0] == "t,msd,msd_over_t2alpha");
    const auto msd = column(m.out, 1);
    CHECK(msd[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(msd[3] == doctest::Approx(2.0).epsilon(1e-15));

    CHECK(run({"verify", "presets"}).code == kExitOk);
    CHECK(run({"verify", "presets", "--h-levels", "2"}).code == kExitUsage);
    (void)kExitCheckFailed;
}
