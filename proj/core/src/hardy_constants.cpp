#include "hardy/hardy_constants.hpp"

#include <cmath>

#include "hardy/gamma.hpp"

namespace hardy {

namespace {

double endpoint_p(int d) { return (d - 2.0) * (d - 2.0) / (2.0 * (d - 1.0)) + 1.0; }

void check_norm(double phi_norm) {
    if (!(phi_norm > 0.0) || !std::isfinite(phi_norm))
        throw std::domain_error("need a finite positive weight norm");
}

void check_d3(SphereDim dim) {
    if (dim.value() < 3)
        throw std::domain_error("need d >= 3");
}

} // namespace

double tau_theorem_main(SphereDim dim, double p, double phi_norm) {
    check_d3(dim);
    check_norm(phi_norm);
    const double d = dim.value();
    if (!(p >= endpoint_p(dim.value())))
        throw std::domain_error("tau_theorem_main: need p >= (d-2)^2/(2(d-1)) + 1 = " +
                                std::to_string(endpoint_p(dim.value())));
    return (d - 2.0) * (d - 2.0) / 4.0 * std::pow(surface_area(dim), 1.0 / p) / phi_norm;
}

double nu0(SphereDim dim, double p) {
    check_d3(dim);
    const double d = dim.value();
    const double hi = endpoint_p(dim.value());
    const double lo = d == 3 ? 1.0 : (d - 1.0) / 2.0;
    const bool lo_ok = d == 3 ? p > lo : p >= lo - 1e-12;
    if (!lo_ok || !(p <= hi + 1e-12))
        throw std::domain_error("nu0: p outside the partial-compensation window [" +
                                std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return 2.0 * (d - 1.0) * (p - 1.0) / ((d - 2.0) * (d - 2.0));
}

TauNu tau_theorem2(SphereDim dim, double p, double phi_norm) {
    check_norm(phi_norm);
    const double d = dim.value();
    TauNu out;
    out.nu0 = nu0(dim, p);  // validates dim and p
    out.tau = out.nu0 * (d - 2.0) * (d - 2.0) / 4.0 *
              std::pow(surface_area(dim), 1.0 / p) / phi_norm;
    return out;
}

double tau_theorem4(SphereDim dim, double p, double nu, double phi_norm,
                    const AlphaMuCurve& curve) {
    check_d3(dim);
    check_norm(phi_norm);
    const double d = dim.value();
    const double lo = std::max(1.0, (d - 1.0) / 2.0);
    const double hi = endpoint_p(dim.value());
    if (!(p > lo) || !(p < hi))
        throw std::domain_error("tau_theorem4: need p strictly inside (" +
                                std::to_string(lo) + ", " + std::to_string(hi) + ")");
    const double v0 = nu0(dim, p);
    if (!(nu > v0) || !(nu <= 1.0))
        throw std::domain_error("tau_theorem4: need nu in (nu0, 1], nu0 = " +
                                std::to_string(v0));
    if (curve.d() != dim.value() || std::abs(curve.p() - p) > 1e-12)
        throw std::invalid_argument("tau_theorem4: curve was built for different (d, p)");

    const double alpha = nu * (d - 2.0) * (d - 2.0) / 4.0;
    const double mu = curve.mu_at(alpha);  // may refuse if the curve is too short
    return std::pow(surface_area(dim), 1.0 / p) * mu / phi_norm;
}

double c_kappa(SphereDim dim, double kappa) {
    const double d = dim.value();
    if (!(kappa > 0.0) || !(kappa < d / 2.0))
        throw std::domain_error("c_kappa: need 0 < kappa < d/2");
    const double gm = gamma_fn((d / 2.0 - kappa) / 2.0);
    const double gp = gamma_fn((d / 2.0 + kappa) / 2.0);
    return std::pow(2.0, -2.0 * kappa) * gm * gm / (gp * gp);
}

double tau_fractional(SphereDim dim, double kappa, double phi_norm_d2k) {
    check_norm(phi_norm_d2k);
    const int d = dim.value();
    if (d >= 3 && !(kappa <= 1.0))
        throw std::domain_error("tau_fractional: need kappa <= 1 for d >= 3");
    // c_kappa enforces 0 < kappa < d/2, which is the whole constraint for d <= 2
    const double ck = c_kappa(dim, kappa);
    const double area = d == 1 ? 2.0 : surface_area(dim);  // |S^0| = two points
    return std::pow(area, 2.0 * kappa / d) / (ck * phi_norm_d2k);
}

HardyConstants make_main_constants(SphereDim dim, double p, double phi_norm) {
    HardyConstants c;
    c.theorem_id = TheoremId::main;
    c.d = dim.value();
    c.p = p;
    c.kappa = 1.0;
    c.tau = tau_theorem_main(dim, p, phi_norm);
    return c;
}

HardyConstants make_main2_constants(SphereDim dim, double p, double phi_norm) {
    HardyConstants c;
    c.theorem_id = TheoremId::main2;
    c.d = dim.value();
    c.p = p;
    c.kappa = 1.0;
    const TauNu tn = tau_theorem2(dim, p, phi_norm);
    c.tau = tn.tau;
    c.nu0 = tn.nu0;
    return c;
}

HardyConstants make_theorem4_constants(SphereDim dim, double p, double nu,
                                       double phi_norm, const AlphaMuCurve& curve) {
    HardyConstants c;
    c.theorem_id = TheoremId::theorem4;
    c.d = dim.value();
    c.p = p;
    c.kappa = 1.0;
    c.tau = tau_theorem4(dim, p, nu, phi_norm, curve);
    c.nu0 = nu0(dim, p);
    c.nu = nu;
    return c;
}

HardyConstants make_fractional_constants(SphereDim dim, double kappa,
                                         double phi_norm_d2k) {
    HardyConstants c;
    c.theorem_id = TheoremId::fractional;
    c.d = dim.value();
    c.p = dim.value() / (2.0 * kappa);
    c.kappa = kappa;
    c.tau = tau_fractional(dim, kappa, phi_norm_d2k);
    return c;
}

} // namespace hardy
