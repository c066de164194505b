#pragma once

#include <optional>

#include "hardy/alpha_mu.hpp"
#include "hardy/weights.hpp"

namespace hardy {

// One fully-determined constant set for a single inequality instance.  kappa
// is the homogeneity order of the weight |x|^{-2 kappa} (1 for the
// second-order inequalities).
struct HardyConstants {
    TheoremId theorem_id = TheoremId::main;
    int d = 0;
    double p = 0.0;
    double kappa = 1.0;
    double tau = 0.0;
    std::optional<double> nu0;
    std::optional<double> nu;
};

// tau of the full-compensation inequality: (d-2)^2/4 * |S^{d-1}|^{1/p} / phi_norm.
// p must sit in the closed-below window p >= (d-2)^2/(2(d-1)) + 1.
double tau_theorem_main(SphereDim dim, double p, double phi_norm);

// nu0 = 2(d-1)(p-1)/(d-2)^2, the compensated fraction on the linear branch.
// Accepted window: (1, endpoint] for d = 3, [(d-1)/2, endpoint] for d >= 4,
// endpoint = (d-2)^2/(2(d-1)) + 1 (where nu0 = 1 and the partial inequality
// coincides with the full one).
double nu0(SphereDim dim, double p);

struct TauNu {
    double nu0;
    double tau;
};

// Constant pair of the partial-compensation inequality:
// tau = nu0 (d-2)^2/4 |S^{d-1}|^{1/p} / phi_norm.
TauNu tau_theorem2(SphereDim dim, double p, double phi_norm);

// Curve-based constant for a chosen nu in (nu0, 1]:
// tau = |S^{d-1}|^{1/p} mu(nu (d-2)^2/4) / phi_norm.  Needs the curve to
// cover alpha = nu (d-2)^2/4.
double tau_theorem4(SphereDim dim, double p, double nu, double phi_norm,
                    const AlphaMuCurve& curve);

// C_kappa = 2^{-2k} Gamma^2((d/2-k)/2) / Gamma^2((d/2+k)/2); 0 < kappa < d/2.
double c_kappa(SphereDim dim, double kappa);

// Fractional-order constant:
// 2^{2k} Gamma^2((d/2+k)/2)/Gamma^2((d/2-k)/2) |S^{d-1}|^{2k/d} / phi_norm,
// phi_norm taken in L^{d/(2k)}.  kappa < d/2 for d in {1,2}, kappa <= 1 for
// d >= 3.
double tau_fractional(SphereDim dim, double kappa, double phi_norm_d2k);

// Builders stamping the theorem_id so reports stay self-describing.
HardyConstants make_main_constants(SphereDim dim, double p, double phi_norm);
HardyConstants make_main2_constants(SphereDim dim, double p, double phi_norm);
HardyConstants make_theorem4_constants(SphereDim dim, double p, double nu,
                                       double phi_norm, const AlphaMuCurve& curve);
HardyConstants make_fractional_constants(SphereDim dim, double kappa,
                                         double phi_norm_d2k);

} // namespace hardy
