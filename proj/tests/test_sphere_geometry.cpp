#include <doctest.h>

#include <cmath>
#include <numbers>

#include <hardy/errors.hpp>
#include <hardy/sphere_geometry.hpp>

#include "oracles.hpp"

using namespace hardy;
namespace {
constexpr double pi = std::numbers::pi;
}

TEST_SUITE_BEGIN("sphere_geometry");

TEST_CASE("surface_area closed forms") {
    CHECK(surface_area(SphereDim(2)) == doctest::Approx(2.0 * pi).epsilon(1e-14));
    CHECK(surface_area(SphereDim(3)) == doctest::Approx(4.0 * pi).epsilon(1e-14));
    CHECK(surface_area(SphereDim(4)) == doctest::Approx(2.0 * pi * pi).epsilon(1e-14));
    // d = 5: |S^4| = 8 pi^2 / 3
    CHECK(surface_area(SphereDim(5)) ==
          doctest::Approx(8.0 * pi * pi / 3.0).epsilon(1e-14));
    CHECK_THROWS_AS(surface_area(SphereDim(1)), std::domain_error);
    CHECK_THROWS_AS(SphereDim(0), std::domain_error);
}

TEST_CASE("axisym_rule normalization and moments") {
    for (int d : {3, 4, 5, 6}) {
        for (int n : {2, 8, 64}) {
            QuadratureRule r = axisym_rule(SphereDim(d), n);
            double total = 0.0;
            for (double w : r.weight) {
                CHECK(w > 0.0);
                total += w;
            }
            CHECK(total == doctest::Approx(surface_area(SphereDim(d))).epsilon(1e-12));
        }
    }
    QuadratureRule r3 = axisym_rule(SphereDim(3), 16);
    CHECK(integrate(r3, [](double t) { return std::cos(t); }) ==
          doctest::Approx(0.0).epsilon(1e-13));
    CHECK(integrate(r3, [](double t) { return std::cos(t) * std::cos(t); }) ==
          doctest::Approx(4.0 * pi / 3.0).epsilon(1e-13));
}

TEST_CASE("declared polynomial exactness degree") {
    // moments of cos^k(theta) against sin^{d-2} have closed forms through the
    // oracle integrator; the rule must reproduce every k up to its declaration
    for (int d : {3, 5}) {
        QuadratureRule r = axisym_rule(SphereDim(d), 6);
        REQUIRE(r.exact_cos_degree >= 2 * 6 - 1);
        for (int k = 0; k <= r.exact_cos_degree; k += 3) {
            const double via_rule =
                integrate(r, [&](double t) { return std::pow(std::cos(t), k); });
            const double via_oracle = oracle::sphere_integral(
                [&](double t) { return std::pow(std::cos(t), k); }, d, 1e-14);
            CHECK(via_rule == doctest::Approx(via_oracle).epsilon(1e-12));
        }
    }
}

TEST_CASE("integrate on raw samples") {
    QuadratureRule r = axisym_rule(SphereDim(4), 12);
    std::vector<double> zero(r.size(), 0.0), ones(r.size(), 2.5);
    CHECK(integrate(r, zero) == 0.0);
    CHECK(integrate(r, ones) ==
          doctest::Approx(2.5 * surface_area(SphereDim(4))).epsilon(1e-13));

    std::vector<double> bad(r.size(), 1.0);
    bad[3] = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(integrate(r, bad), quadrature_error);
    std::vector<double> short_vec(r.size() - 1, 1.0);
    CHECK_THROWS_AS(integrate(r, short_vec), std::invalid_argument);
}

TEST_CASE("singular-endpoint rule vs adaptive oracle") {
    // theta^{-1/2} is integrable against sin(theta); the graded split rule
    // must land on the oracle value to 1e-9 relative
    QuadratureRule r = axisym_singular_rule(SphereDim(3), 64);
    const double via_rule =
        integrate(r, [](double t) { return 1.0 / std::sqrt(t); });
    const double via_oracle = oracle::sphere_integral(
        [](double t) { return 1.0 / std::sqrt(t); }, 3, 1e-13);
    CHECK(via_rule == doctest::Approx(via_oracle).epsilon(1e-9));
}

TEST_CASE("smooth integrand convergence under n doubling") {
    auto g = [](double t) { return std::exp(std::cos(t)); };
    const double ref = oracle::sphere_integral(g, 3, 1e-14);
    double err_coarse = std::abs(integrate(axisym_rule(SphereDim(3), 4), g) - ref);
    double err_fine = std::abs(integrate(axisym_rule(SphereDim(3), 8), g) - ref);
    CHECK(err_fine <= 0.5 * err_coarse);
    // Gauss nodes on an analytic integrand: 16 nodes is already roundoff
    CHECK(std::abs(integrate(axisym_rule(SphereDim(3), 16), g) - ref) <= 1e-12 * ref);
}

TEST_CASE("panel rule splits cleanly") {
    std::vector<double> breaks{0.0, 0.7853981633974483, pi};
    QuadratureRule r = axisym_panel_rule(SphereDim(3), breaks, 24);
    double total = 0.0;
    for (double w : r.weight) total += w;
    CHECK(total == doctest::Approx(4.0 * pi).epsilon(1e-12));
    std::vector<double> decreasing{1.0, 0.5};
    CHECK_THROWS_AS(axisym_panel_rule(SphereDim(3), decreasing, 8),
                    std::invalid_argument);
}

TEST_CASE("gauss_legendre basics") {
    auto [nodes, weights] = gauss_legendre(5);
    double total = 0.0, quartic = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        total += weights[i];
        quartic += weights[i] * std::pow(nodes[i], 4);
    }
    CHECK(total == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(quartic == doctest::Approx(2.0 / 5.0).epsilon(1e-13));
}

TEST_CASE("full sphere rule integrates azimuthal modes") {
    QuadratureRule r = full_s2_rule(24, 48);
    CHECK(r.kind == RuleKind::full_s2);
    double total = 0.0;
    for (double w : r.weight) total += w;
    CHECK(total == doctest::Approx(4.0 * pi).epsilon(1e-12));
    const double v = integrate(
        r, [](double t, double ph) { return std::sin(t) * std::cos(ph); });
    CHECK(v == doctest::Approx(0.0).epsilon(1e-12));
    const double w2 = integrate(
        r, [](double t, double ph) { return std::pow(std::sin(t) * std::cos(ph), 2); });
    // int sin^2 cos^2 over S^2 = (4 pi / 3) * (1/2) * ... = 8 pi / 6
    CHECK(w2 == doctest::Approx(8.0 * pi / 6.0).epsilon(1e-10));
}

TEST_CASE("rules are deterministic data") {
    QuadratureRule a = axisym_rule(SphereDim(4), 32);
    QuadratureRule b = axisym_rule(SphereDim(4), 32);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a.theta[i] == b.theta[i]);
        CHECK(a.weight[i] == b.weight[i]);
    }
}

TEST_SUITE_END();
