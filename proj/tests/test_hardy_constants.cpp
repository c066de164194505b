#include <doctest.h>

#include <cmath>
#include <limits>

#include <hardy/errors.hpp>
#include <hardy/hardy_constants.hpp>
#include <hardy/weights.hpp>

#include "oracles.hpp"

using namespace hardy;

namespace {

double endpoint(int d) { return (d - 2.0) * (d - 2.0) / (2.0 * (d - 1.0)) + 1.0; }

// L^p norm of the constant weight 1, i.e. |S^{d-1}|^{1/p}
double unit_norm(int d, double p) { return std::pow(surface_area(SphereDim(d)), 1.0 / p); }

} // namespace

TEST_SUITE("hardy_constants") {

TEST_CASE("full-compensation constant recovers (d-2)^2/4 for the flat weight") {
    for (int d = 3; d <= 10; ++d) {
        const double ep = endpoint(d);
        for (double p : {ep, ep + 1.0, ep + 3.0}) {
            const double tau = tau_theorem_main(SphereDim(d), p, unit_norm(d, p));
            const double want = (d - 2.0) * (d - 2.0) / 4.0;
            CHECK(tau == doctest::Approx(want).epsilon(1e-12));
        }
    }
}

TEST_CASE("full-compensation constant for a hemispherical weight") {
    // ||1_{upper half}||_{5/4} = (2 pi)^{4/5} on S^2, so tau picks up 2^{4/5}
    const double p = 1.25;
    const double norm = std::pow(2.0 * M_PI, 1.0 / p);
    const double tau = tau_theorem_main(SphereDim(3), p, norm);
    CHECK(tau == doctest::Approx(0.25 * std::pow(2.0, 1.0 / p)).epsilon(1e-12));
}

TEST_CASE("tau scales inversely with the weight norm") {
    const double base = tau_theorem_main(SphereDim(4), 2.0, 3.7);
    CHECK(tau_theorem_main(SphereDim(4), 2.0, 7.4) == doctest::Approx(0.5 * base).epsilon(1e-15));
}

TEST_CASE("full-compensation window is closed below and validated") {
    // the thrown message should name the actual bound so callers can fix p
    CHECK_THROWS_WITH_AS(tau_theorem_main(SphereDim(3), 1.2, 1.0),
                         doctest::Contains("1.25"), std::domain_error);
    CHECK_THROWS_AS(tau_theorem_main(SphereDim(2), 2.0, 1.0), std::domain_error);
    CHECK_NOTHROW(tau_theorem_main(SphereDim(3), endpoint(3), 1.0));

    CHECK_THROWS_AS(tau_theorem_main(SphereDim(3), 2.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(tau_theorem_main(SphereDim(3), 2.0, -1.0), std::domain_error);
    CHECK_THROWS_AS(tau_theorem_main(SphereDim(3), 2.0,
                                     std::numeric_limits<double>::quiet_NaN()),
                    std::domain_error);
    CHECK_THROWS_AS(tau_theorem_main(SphereDim(3), 2.0,
                                     std::numeric_limits<double>::infinity()),
                    std::domain_error);
}

TEST_CASE("compensated fraction nu0") {
    // nu0 = 2 (d-1)(p-1) / (d-2)^2
    CHECK(nu0(SphereDim(4), 1.5) == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(nu0(SphereDim(3), 1.125) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(nu0(SphereDim(5), 2.0) == doctest::Approx(8.0 / 9.0).epsilon(1e-15));

    // at the endpoint exponent the fraction reaches one
    for (int d = 3; d <= 6; ++d)
        CHECK(nu0(SphereDim(d), endpoint(d)) == doctest::Approx(1.0).epsilon(1e-13));

    // window: (1, endpoint] for d = 3, [(d-1)/2, endpoint] for d >= 4
    CHECK_THROWS_AS(nu0(SphereDim(3), 1.0), std::domain_error);
    CHECK_THROWS_AS(nu0(SphereDim(3), 1.26), std::domain_error);
    CHECK_NOTHROW(nu0(SphereDim(4), 1.5));
    CHECK_THROWS_AS(nu0(SphereDim(4), 1.49), std::domain_error);
    CHECK_THROWS_AS(nu0(SphereDim(4), 1.7), std::domain_error);
}

TEST_CASE("partial-compensation pair") {
    // d = 3, p = 9/8, flat weight: nu0 = 1/2 and tau = 1/2 * 1/4
    const TauNu tn = tau_theorem2(SphereDim(3), 1.125, unit_norm(3, 1.125));
    CHECK(tn.nu0 == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(tn.tau == doctest::Approx(0.125).epsilon(1e-12));

    // compensated + uncompensated parts always add up to the full constant
    for (int d : {3, 4, 5, 6}) {
        const double lo = d == 3 ? 1.001 : (d - 1.0) / 2.0;
        const double hi = endpoint(d);
        for (double t : {0.0, 0.3, 0.7, 1.0}) {
            const double p = lo + t * (hi - lo);
            const TauNu r = tau_theorem2(SphereDim(d), p, unit_norm(d, p));
            const double full = (d - 2.0) * (d - 2.0) / 4.0;
            CHECK(r.tau + (1.0 - r.nu0) * full == doctest::Approx(full).epsilon(1e-12));
        }
    }
}

TEST_CASE("at the endpoint exponent the partial constant meets the full one") {
    for (int d : {3, 4, 5, 6}) {
        const double p = endpoint(d);
        const double norm = unit_norm(d, p);
        const TauNu tn = tau_theorem2(SphereDim(d), p, norm);
        const double tm = tau_theorem_main(SphereDim(d), p, norm);
        CHECK(tn.nu0 == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(tn.tau == doctest::Approx(tm).epsilon(1e-12));
    }
}

TEST_CASE("curve-based constant") {
    const SphereDim dim(4);
    const double p = 1.6;            // window (1.5, 5/3), nu0 = 0.9
    const double norm = unit_norm(4, p);
    // static: doctest re-enters the case body once per subcase
    static const AlphaMuCurve curve = [] {
        CurveOptions copt;
        copt.samples = 32;
        copt.alpha_max_factor = 1.5;  // dense grid over alpha in [0.9, 1.5]
        return build_curve(SphereDim(4), 1.6, copt);
    }();

    SUBCASE("nu = 1 reduces to the spectral bound at alpha = (d-2)^2/4") {
        const double tau = tau_theorem4(dim, p, 1.0, norm, curve);
        const MuResult direct = mu_of_alpha(1.0, dim, 2.0 * p / (p - 1.0));
        REQUIRE(direct.converged);
        // flat weight: the area factors cancel and tau is mu(1) up to the
        // curve's interpolation error
        CHECK(tau == doctest::Approx(direct.mu).epsilon(1e-5));
    }

    SUBCASE("continuous limit onto the partial-compensation constant") {
        const double v0 = nu0(dim, p);
        const TauNu tn = tau_theorem2(dim, p, norm);
        const double tau = tau_theorem4(dim, p, v0 * (1.0 + 1e-9), norm, curve);
        CHECK(tau == doctest::Approx(tn.tau).epsilon(1e-7));
    }

    SUBCASE("strictly increasing in nu") {
        double prev = 0.0;
        for (double nu : {0.92, 0.95, 0.98, 1.0}) {
            const double tau = tau_theorem4(dim, p, nu, norm, curve);
            CHECK(tau > prev);
            prev = tau;
        }
        // and always above the nu0 baseline
        CHECK(prev > tau_theorem2(dim, p, norm).tau);
    }

    SUBCASE("nu window (nu0, 1] is enforced") {
        CHECK_THROWS_AS(tau_theorem4(dim, p, 0.9, norm, curve), std::domain_error);
        CHECK_THROWS_AS(tau_theorem4(dim, p, 0.5, norm, curve), std::domain_error);
        CHECK_THROWS_AS(tau_theorem4(dim, p, 1.01, norm, curve), std::domain_error);
    }

    SUBCASE("p window is open on both sides") {
        CHECK_THROWS_AS(tau_theorem4(dim, 1.5, 0.95, norm, curve), std::domain_error);
        CHECK_THROWS_AS(tau_theorem4(dim, 5.0 / 3.0, 0.95, norm, curve), std::domain_error);
    }

    SUBCASE("curve must match the requested instance") {
        CHECK_THROWS_AS(tau_theorem4(dim, 1.62, 0.99, norm, curve), std::invalid_argument);
        CurveOptions small;
        small.samples = 12;
        small.alpha_max_factor = 2.0;
        const AlphaMuCurve other = build_curve(SphereDim(5), 2.05, small);
        CHECK_THROWS_AS(tau_theorem4(dim, p, 1.0, norm, other), std::invalid_argument);
    }

    SUBCASE("a curve that stops short of nu (d-2)^2/4 refuses to extrapolate") {
        // d = 5: the target alpha is 9/4 but the curve stops at
        // 1.05 * threshold = 2.205 (the factor is floored at alpha = 1, so a
        // too-short curve needs a threshold above one)
        CurveOptions shallow;
        shallow.samples = 12;
        shallow.alpha_max_factor = 1.05;
        const AlphaMuCurve stub = build_curve(SphereDim(5), 2.05, shallow);
        CHECK_THROWS_AS(tau_theorem4(SphereDim(5), 2.05, 1.0, unit_norm(5, 2.05), stub),
                        extrapolation_error);
    }
}

TEST_CASE("fractional normalization constant") {
    // closed forms via Gamma(x+1) = x Gamma(x)
    CHECK(c_kappa(SphereDim(3), 1.0) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(c_kappa(SphereDim(4), 1.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(c_kappa(SphereDim(5), 1.0) == doctest::Approx(4.0 / 9.0).epsilon(1e-12));
    CHECK(c_kappa(SphereDim(3), 0.5) == doctest::Approx(M_PI / 2.0).epsilon(1e-12));

    // kappa -> 0 degenerates to 1 (no weight at all)
    CHECK(c_kappa(SphereDim(3), 1e-8) == doctest::Approx(1.0).epsilon(1e-6));

    CHECK_THROWS_AS(c_kappa(SphereDim(3), 0.0), std::domain_error);
    CHECK_THROWS_AS(c_kappa(SphereDim(3), 1.5), std::domain_error);
    CHECK_THROWS_AS(c_kappa(SphereDim(2), 1.0), std::domain_error);
    CHECK_THROWS_AS(c_kappa(SphereDim(1), 0.5), std::domain_error);
}

TEST_CASE("fractional constant at kappa = 1 matches the second-order one") {
    for (int d = 3; d <= 8; ++d) {
        // ||1||_{L^{d/2}} = |S^{d-1}|^{2/d}
        const double norm = std::pow(surface_area(SphereDim(d)), 2.0 / d);
        const double tau = tau_fractional(SphereDim(d), 1.0, norm);
        CHECK(tau == doctest::Approx((d - 2.0) * (d - 2.0) / 4.0).epsilon(1e-12));
    }
}

TEST_CASE("fractional constant, half order in three dimensions") {
    const double norm = std::pow(4.0 * M_PI, 1.0 / 3.0);  // ||1||_{L^3} on S^2
    CHECK(tau_fractional(SphereDim(3), 0.5, norm) == doctest::Approx(2.0 / M_PI).epsilon(1e-12));
}

TEST_CASE("fractional constant with a hemispherical weight") {
    const double norm = std::pow(2.0 * M_PI, 2.0 / 3.0);  // L^{3/2} norm of the half-cap
    const double tau = tau_fractional(SphereDim(3), 1.0, norm);
    CHECK(tau == doctest::Approx(std::pow(2.0, 2.0 / 3.0) / 4.0).epsilon(1e-12));
}

TEST_CASE("fractional order windows") {
    CHECK_THROWS_AS(tau_fractional(SphereDim(3), 1.01, 1.0), std::domain_error);
    CHECK_NOTHROW(tau_fractional(SphereDim(3), 1.0, 1.0));
    // low dimensions: kappa < d/2 with no order-one cap
    CHECK_THROWS_AS(tau_fractional(SphereDim(2), 1.0, 1.0), std::domain_error);
    CHECK_NOTHROW(tau_fractional(SphereDim(2), 0.99, 1.0));
    CHECK_THROWS_AS(tau_fractional(SphereDim(1), 0.5, 1.0), std::domain_error);
    CHECK_NOTHROW(tau_fractional(SphereDim(1), 0.49, 1.0));
    CHECK_THROWS_AS(tau_fractional(SphereDim(3), 1.0, 0.0), std::domain_error);
}

TEST_CASE("the fractional exponent d/2 sits strictly above the endpoint") {
    // the gap is (d-2)/(2(d-1)) > 0, so the L^{d/2} norm always demands
    // strictly more integrability than the endpoint exponent
    for (int d = 3; d <= 12; ++d) {
        const double ep = theorem_p_range(TheoremId::main, SphereDim(d)).lower;
        CHECK(d / 2.0 > ep);
        CHECK(d / 2.0 - ep ==
              doctest::Approx((d - 2.0) / (2.0 * (d - 1.0))).epsilon(1e-12));
    }
}

TEST_CASE("builders stamp the instance description") {
    const double norm3 = unit_norm(3, 2.0);
    const HardyConstants m = make_main_constants(SphereDim(3), 2.0, norm3);
    CHECK(m.theorem_id == TheoremId::main);
    CHECK(m.d == 3);
    CHECK(m.p == 2.0);
    CHECK(m.kappa == 1.0);
    CHECK(m.tau == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(!m.nu0.has_value());
    CHECK(!m.nu.has_value());

    const HardyConstants m2 = make_main2_constants(SphereDim(3), 1.125, unit_norm(3, 1.125));
    CHECK(m2.theorem_id == TheoremId::main2);
    CHECK(m2.nu0.has_value());
    CHECK(*m2.nu0 == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(!m2.nu.has_value());

    CurveOptions copt;
    copt.samples = 16;
    copt.alpha_max_factor = 2.0;
    const AlphaMuCurve curve = build_curve(SphereDim(4), 1.6, copt);
    const HardyConstants t4 =
        make_theorem4_constants(SphereDim(4), 1.6, 1.0, unit_norm(4, 1.6), curve);
    CHECK(t4.theorem_id == TheoremId::theorem4);
    CHECK(t4.nu0.has_value());
    CHECK(*t4.nu0 == doctest::Approx(0.9).epsilon(1e-12));
    CHECK(t4.nu.has_value());
    CHECK(*t4.nu == 1.0);
    CHECK(t4.tau > 0.0);

    const HardyConstants fr = make_fractional_constants(SphereDim(4), 0.5, 2.0);
    CHECK(fr.theorem_id == TheoremId::fractional);
    CHECK(fr.kappa == 0.5);
    CHECK(fr.p == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(!fr.nu0.has_value());
    CHECK(!fr.nu.has_value());
}

} // TEST_SUITE
