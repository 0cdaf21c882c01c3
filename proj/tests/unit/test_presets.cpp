#include "barenblatt/errors.hpp"
#include "barenblatt/family.hpp"
#include "barenblatt/presets.hpp"
#include "barenblatt/quadrature.hpp"

#include <boost/math/special_functions/binomial.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace barenblatt;

TEST_CASE("p-Laplacian mapping") {
    const auto [pp, f] = ple_preset(3.0, 1);
    CHECK(pp.k == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(pp.q == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    CHECK(f.beta_exp() == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(f.gamma_exp() == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(f.alpha() == doctest::Approx(0.25).epsilon(1e-15));
    for (double p : {2.5, 3.0, 4.0, 7.0})
        for (int d : {1, 2, 3}) {
            const auto [q, fam] = ple_preset(p, d);
            const double e = (p - 1.0) / (p - 2.0);
            CHECK(fam.norm_c() == doctest::Approx(std::pow(q.frak_c, e)).epsilon(1e-12));
            CHECK(fam.c() == doctest::Approx(std::pow(q.frak_c / q.q, (p - 1.0) / p)).epsilon(1e-12));
            CHECK(std::fabs(total_mass(fam, 1.0) - 1.0) <= 1e-8);
        }
    CHECK_THROWS_AS(ple_preset(2.0, 1), DomainError);
    CHECK_FALSE(ple_preset(2.02, 1).first.warning.empty());
}

TEST_CASE("nonlocal porous medium mapping") {
    const auto [np, f] = npme_preset(2.0, 2.0, 1);
    CHECK(np.alpha == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(f.alpha() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(f.beta_exp() == 2.0);
    CHECK(f.gamma_exp() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(np.c == doctest::Approx(std::pow(np.k, -0.5)).epsilon(1e-15));
    CHECK(np.c_literal == doctest::Approx(1.0 / np.k).epsilon(1e-15));
    for (double m : {1.5, 2.0, 3.0})
        for (double nu : {0.5, 1.0, 2.0})
            for (int d : {1, 2, 3}) {
                const auto [q, fam] = npme_preset(m, nu, d);
                CHECK(q.gamma == doctest::Approx(nu / (2.0 * (m - 1.0))).epsilon(1e-15));
                CHECK(std::fabs(q.C_discrepancy) <= 1e-12);
                CHECK(std::fabs(q.mass_residual_c) <= 1e-8);
                CHECK(std::fabs(total_mass(fam, 0.7) - 1.0) <= 1e-8);
            }
    CHECK_THROWS_AS(npme_preset(1.0, 2.0, 1), DomainError);
    CHECK_THROWS_AS(npme_preset(2.0, 2.5, 1), DomainError);
}

TEST_CASE("EPD mapping") {
    const auto [e, f] = epd_preset(2.0, 1.0, 3);
    const double x0[] = {0.0, 0.0, 0.0};
    CHECK(pdf(f, x0, 1.0) == doctest::Approx(15.0 / (8.0 * std::numbers::pi)).epsilon(1e-14));
    for (double nu : {1.5, 2.0, 3.0, 4.5})
        for (int d : {1, 2, 3}) {
            const auto [q, fam] = epd_preset(nu, 1.3, d);
            const double ref = boost::math::tgamma(nu + 0.5 * d) /
                               (std::pow(std::numbers::pi, 0.5 * d) * boost::math::tgamma(nu) * std::pow(1.3, d));
            CHECK(q.C_closed_form == doctest::Approx(ref).epsilon(1e-13));
            CHECK(std::fabs(q.C_rel_discrepancy) <= 1e-12);
            CHECK(fam.alpha() == 1.0);
            CHECK(fam.gamma_exp() == doctest::Approx(nu - 1.0).epsilon(1e-15));
        }
    CHECK_THROWS_AS(epd_preset(1.0, 1.0, 1), DomainError);
}

TEST_CASE("Wigner preset and Catalan numbers") {
    const FamilyParams w = wigner_preset();
    const double x0[] = {0.0};
    CHECK(std::fabs(pdf(w, x0, 1.0) - 1.0 / std::numbers::pi) <= 1e-14);
    for (double t : {0.5, 2.0}) {
        const double x[] = {0.7};
        CHECK(pdf(w, x, t) ==
              doctest::Approx(std::sqrt(4.0 * t - 0.49) / (2.0 * std::numbers::pi * t)).epsilon(1e-13));
    }
    // The EPD law at nu = 3/2, c = 2, evaluated at sqrt(t), is the Wigner density.
    const auto [e, f] = epd_preset(1.5, 2.0, 1);
    for (double t : {0.5, 1.0, 2.0})
        for (double x : {0.0, 0.3, 1.1}) {
            const double xs[] = {x};
            if (std::fabs(x) < 2.0 * std::sqrt(t))
                CHECK(pdf(f, xs, std::sqrt(t)) == doctest::Approx(pdf(w, xs, t)).epsilon(1e-13));
        }

    const std::uint64_t first[] = {1, 1, 2, 5, 14, 42};
    for (int m = 0; m < 6; ++m) CHECK(catalan(m) == first[m]);
    for (int m = 0; m <= 30; ++m)
        CHECK(static_cast<double>(catalan(m)) ==
              doctest::Approx(boost::math::binomial_coefficient<double>(2 * m, m) / (m + 1)).epsilon(1e-15));
    CHECK(catalan(36) == 11959798385860453492ULL);
    CHECK_THROWS_AS(catalan(37), DomainError);
    CHECK_THROWS_AS(catalan(-1), DomainError);
}

TEST_CASE("time-fractional constants") {
    const auto fp = fractional_preset(0.2);
    CHECK(std::fabs(fp.C1 - std::sin(0.2 * std::numbers::pi) / (2.0 * std::sin(0.4 * std::numbers::pi))) <=
          1e-12);
    CHECK(fp.C1 == doctest::Approx(0.3090170).epsilon(1e-6));
    using boost::math::tgamma;
    CHECK(fp.C1 == doctest::Approx(tgamma(0.4) * tgamma(0.6) / (2.0 * tgamma(0.2) * tgamma(0.8))).epsilon(1e-12));
    CHECK(fp.C2 == doctest::Approx(tgamma(0.4) / (4.0 * tgamma(0.2))).epsilon(1e-12));
    CHECK(fp.C2 == doctest::Approx(0.120793).epsilon(1e-5));
    for (double nu : {0.26, 0.3, 0.33}) {
        const auto q = fractional_preset(nu);
        CHECK(q.C1 < 0.0);
        CHECK(q.C2 < 0.0);
    }
    CHECK(std::fabs(fractional_preset(0.2499).C1) < 2e-3);
    CHECK(std::fabs(fractional_preset(0.249999).C1) < 2e-5);
    CHECK_THROWS_AS(fractional_preset(0.25), DomainError);
    CHECK_THROWS_AS(fractional_preset(0.0), DomainError);
    CHECK_THROWS_AS(fractional_preset(1.0 / 3.0), DomainError);
}
