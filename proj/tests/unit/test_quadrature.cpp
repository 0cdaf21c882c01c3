#include "barenblatt/errors.hpp"
#include "barenblatt/quadrature.hpp"
#include "barenblatt/specfun.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace barenblatt;

TEST_CASE("smooth integrands") {
    CHECK(integrate([](double x) { return x * x; }, 0.0, 3.0) == doctest::Approx(9.0).epsilon(1e-14));
    CHECK(integrate([](double x) { return std::exp(x); }, -1.0, 2.0) ==
          doctest::Approx(std::exp(2.0) - std::exp(-1.0)).epsilon(1e-14));
    CHECK(integrate([](double) { return 1.0; }, 2.0, 2.0) == 0.0);
}

TEST_CASE("integrable endpoint singularities") {
    // int_0^1 x^-1/2 = 2 and int_0^1 sqrt(1 - x^2) = pi/4.
    CHECK(integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0) ==
          doctest::Approx(2.0).epsilon(1e-11));
    CHECK(integrate([](double x) { return std::sqrt(1.0 - x * x); }, 0.0, 1.0) ==
          doctest::Approx(std::numbers::pi / 4.0).epsilon(1e-13));
}

TEST_CASE("weighted rule absorbs strong endpoint weights") {
    for (double a : {-0.9, -0.5, 0.0, 1.3})
        for (double b : {-0.8, 0.0, 2.0}) {
            const double v = integrate_weighted([](double) { return 1.0; }, 0.0, 1.0, {a, b});
            CHECK(v == doctest::Approx(beta_fn(a + 1.0, b + 1.0)).epsilon(1e-12));
        }
    const double v = integrate_weighted([](double x) { return std::cos(x); }, 0.0, 2.0, {-0.5, 0.0});
    const double ref = integrate([](double x) { return std::cos(x) / std::sqrt(x); }, 0.0, 2.0);
    CHECK(v == doctest::Approx(ref).epsilon(1e-10));
    CHECK_THROWS_AS(integrate_weighted([](double) { return 1.0; }, 0.0, 1.0, {-1.0, 0.0}), DomainError);
}

TEST_CASE("panelled oscillatory integral") {
    const double w = 200.0;
    const double v = integrate_panels([&](double x) { return std::cos(w * x); }, 0.0, 1.0,
                                      std::numbers::pi / w);
    CHECK(std::fabs(v - std::sin(w) / w) <= 1e-13);
}

TEST_CASE("non-convergence is reported") {
    QuadratureConfig cfg;
    cfg.max_subdivisions = 2;
    const QuadratureResult r =
        integrate_checked([](double x) { return std::sin(1.0 / (x + 1e-3)); }, 0.0, 1.0, cfg);
    CHECK_FALSE(r.converged);
    CHECK_THROWS_AS(integrate([](double x) { return std::sin(1.0 / (x + 1e-3)); }, 0.0, 1.0, cfg),
                    ConvergenceError);
    QuadratureConfig bad;
    bad.rel_tol = -1.0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
}
