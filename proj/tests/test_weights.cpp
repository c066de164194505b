#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include <hardy/errors.hpp>
#include <hardy/sphere_geometry.hpp>
#include <hardy/weights.hpp>

#include "oracles.hpp"

using namespace hardy;
namespace {
constexpr double pi = std::numbers::pi;

WeightSpec ramp_tabulated() {
    std::vector<double> ang, val;
    for (int i = 1; i <= 40; ++i) {
        ang.push_back(pi * i / 41.0);
        val.push_back(0.1 + std::abs(std::sin(3.0 * ang.back())));
    }
    return WeightSpec::tabulated(ang, val);
}
} // namespace

TEST_SUITE_BEGIN("weights");

TEST_CASE("pointwise evaluation") {
    CHECK(evaluate(WeightSpec::constant(3.0), 1.0) == 3.0);
    WeightSpec cap = WeightSpec::cap_indicator(1.0, pi / 2.0);
    CHECK(evaluate(cap, pi / 4.0) == 1.0);
    CHECK(evaluate(cap, 2.0) == 0.0);
    CHECK(evaluate(WeightSpec::polar_power(1.0, 0.5), 0.25) ==
          doctest::Approx(2.0).epsilon(1e-15));
    CHECK_THROWS_AS(evaluate(WeightSpec::polar_power(1.0, 0.5), 0.0),
                    singular_evaluation_error);
    CHECK_THROWS_AS(evaluate(WeightSpec::constant(1.0), -0.1), std::domain_error);
}

TEST_CASE("construction enforces non-negativity and ordering") {
    CHECK_THROWS_AS(WeightSpec::constant(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(WeightSpec::cap_indicator(-2.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(WeightSpec::cap_indicator(1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(WeightSpec::cap_indicator(1.0, pi), std::invalid_argument);
    CHECK_THROWS_AS(WeightSpec::polar_power(-1.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(WeightSpec::tabulated({1.0, 0.5}, {1.0, 1.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(WeightSpec::tabulated({0.5, 1.0}, {1.0, -1.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(WeightSpec::tabulated({0.5}, {1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("lp_norm closed forms") {
    CHECK(lp_norm(WeightSpec::constant(1.0), 1.25, SphereDim(3)) ==
          doctest::Approx(std::pow(4.0 * pi, 0.8)).epsilon(1e-14));
    CHECK(lp_norm(WeightSpec::cap_indicator(1.0, pi / 2.0), 1.5, SphereDim(3)) ==
          doctest::Approx(std::pow(2.0 * pi, 2.0 / 3.0)).epsilon(1e-14));
    for (int d : {3, 4, 5}) {
        for (double p : {1.2, 2.0, 3.5}) {
            const double c = 0.7;
            CHECK(lp_norm(WeightSpec::constant(c), p, SphereDim(d)) ==
                  doctest::Approx(c * std::pow(surface_area(SphereDim(d)), 1.0 / p))
                      .epsilon(1e-14));
        }
    }
}

TEST_CASE("lp_norm is homogeneous in the amplitude") {
    const double a = 3.25;
    CHECK(lp_norm(WeightSpec::polar_power(a, 0.5), 2.0, SphereDim(3)) ==
          doctest::Approx(a * lp_norm(WeightSpec::polar_power(1.0, 0.5), 2.0,
                                      SphereDim(3)))
              .epsilon(1e-14));
    CHECK(lp_norm(WeightSpec::cap_indicator(a, 1.0), 1.5, SphereDim(4)) ==
          doctest::Approx(a * lp_norm(WeightSpec::cap_indicator(1.0, 1.0), 1.5,
                                      SphereDim(4)))
              .epsilon(1e-14));
}

TEST_CASE("singular weight norms against the adaptive oracle") {
    WeightSpec w = WeightSpec::polar_power(1.0, 0.5);
    const double lib1 = lp_norm(w, 1.0, SphereDim(3));
    const double o1 = oracle::sphere_integral(
        [](double t) { return 1.0 / std::sqrt(t); }, 3, 1e-13);
    CHECK(lib1 == doctest::Approx(o1).epsilon(1e-9));

    const double lib2 = lp_norm(w, 2.0, SphereDim(3));
    const double o2 = std::sqrt(
        oracle::sphere_integral([](double t) { return 1.0 / t; }, 3, 1e-13));
    CHECK(lib2 == doctest::Approx(o2).epsilon(1e-8));
}

TEST_CASE("integrability guard on polar powers") {
    // p*beta must stay strictly below d-1 with a 1e-9 margin
    CHECK_THROWS_AS(lp_norm(WeightSpec::polar_power(1.0, 1.0), 2.0, SphereDim(3)),
                    not_integrable_error);
    CHECK_THROWS_AS(
        lp_norm(WeightSpec::polar_power(1.0, (2.0 - 1e-10) / 2.0), 2.0, SphereDim(3)),
        not_integrable_error);
    CHECK_NOTHROW(
        lp_norm(WeightSpec::polar_power(1.0, (2.0 - 1e-3) / 2.0), 2.0, SphereDim(3)));
    CHECK_THROWS_AS(lp_norm(WeightSpec::constant(1.0), 0.5, SphereDim(3)),
                    std::domain_error);
}

TEST_CASE("normalized norm is a power mean, non-decreasing in p") {
    WeightSpec w = ramp_tabulated();
    double prev = 0.0;
    for (double p : {1.0, 1.5, 2.0, 3.0, 5.0}) {
        const double m = lp_norm(w, p, SphereDim(3)) /
                         std::pow(surface_area(SphereDim(3)), 1.0 / p);
        CHECK(m >= prev - 1e-12);
        prev = m;
    }
}

TEST_CASE("adapted rule resolves each weight family") {
    // cap: breakpoint at the edge makes the indicator exact
    WeightSpec cap = WeightSpec::cap_indicator(2.0, 1.0);
    QuadratureRule rc = adapted_rule(cap, SphereDim(3), 64);
    const double cap_area = 2.0 * pi * (1.0 - std::cos(1.0));
    CHECK(lp_norm(cap, 2.0, SphereDim(3), rc) ==
          doctest::Approx(2.0 * std::sqrt(cap_area)).epsilon(1e-12));
    // tabulated: knots honored, norm matches the oracle on the interpolant
    WeightSpec tab = ramp_tabulated();
    const double norm_lib = lp_norm(tab, 2.0, SphereDim(3));
    const double norm_oracle = std::sqrt(oracle::sphere_integral(
        [&](double t) { return std::pow(evaluate(tab, t), 2.0); }, 3, 1e-12));
    CHECK(norm_lib == doctest::Approx(norm_oracle).epsilon(1e-8));
}

TEST_CASE("admissibility windows per theorem") {
    WeightSpec one = WeightSpec::constant(1.0);

    CHECK(admissible(one, SphereDim(3), 1.25, TheoremId::main).ok);       // closed
    CHECK_FALSE(admissible(one, SphereDim(3), 1.2499, TheoremId::main).ok);
    CHECK(admissible(one, SphereDim(4), 5.0 / 3.0, TheoremId::main).ok);
    CHECK_FALSE(admissible(one, SphereDim(4), 1.6, TheoremId::main).ok);

    CHECK(admissible(one, SphereDim(3), 1.1, TheoremId::main2).ok);
    CHECK_FALSE(admissible(one, SphereDim(3), 1.0, TheoremId::main2).ok);  // open
    CHECK_FALSE(admissible(one, SphereDim(3), 1.25, TheoremId::main2).ok); // routed to main
    CHECK(admissible(one, SphereDim(4), 1.55, TheoremId::main2).ok);

    CHECK(admissible(one, SphereDim(4), 1.6, TheoremId::theorem4).ok);
    CHECK_FALSE(admissible(one, SphereDim(4), 1.5, TheoremId::theorem4).ok);
    CHECK_FALSE(admissible(one, SphereDim(4), 5.0 / 3.0, TheoremId::theorem4).ok);
    CHECK(admissible(one, SphereDim(3), 1.125, TheoremId::theorem4).ok);

    // integrability folds in: inside the p-window but not in L^p
    WeightSpec hot = WeightSpec::polar_power(1.0, 1.5);
    auto verdict = admissible(hot, SphereDim(3), 2.0, TheoremId::main);
    CHECK_FALSE(verdict.ok);
    CHECK(verdict.range.contains(2.0));

    // fractional admissibility is on the exponent d/(2 kappa), window (1, inf)
    CHECK(admissible(one, SphereDim(3), 2.0, TheoremId::fractional).ok);
    CHECK_FALSE(admissible(one, SphereDim(3), 1.0, TheoremId::fractional).ok);
}

TEST_CASE("p-range metadata") {
    PRange main3 = theorem_p_range(TheoremId::main, SphereDim(3));
    CHECK(main3.lower == doctest::Approx(1.25).epsilon(1e-15));
    CHECK(main3.lower_closed);
    CHECK_FALSE(main3.describe().empty());

    PRange t4 = theorem_p_range(TheoremId::theorem4, SphereDim(4));
    CHECK(t4.lower == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(t4.upper == doctest::Approx(5.0 / 3.0).epsilon(1e-15));
    CHECK_FALSE(t4.lower_closed);
    CHECK_FALSE(t4.upper_closed);

    PRange fr = theorem_p_range(TheoremId::fractional, SphereDim(3));
    CHECK(fr.contains(1.5));
    CHECK_FALSE(fr.contains(1.0));

    CHECK_THROWS_AS(theorem_p_range(TheoremId::main, SphereDim(2)), std::domain_error);
}

TEST_CASE("theorem id strings round-trip") {
    for (TheoremId id : {TheoremId::main, TheoremId::main2, TheoremId::theorem4,
                         TheoremId::fractional}) {
        CHECK(theorem_from_string(to_string(id)) == id);
    }
    CHECK_THROWS_AS(theorem_from_string("bogus"), std::invalid_argument);
}

TEST_SUITE_END();
