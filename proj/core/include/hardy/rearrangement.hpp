#pragma once

#include <span>

#include "hardy/weights.hpp"

namespace hardy {

// W(x) = Phi(x/|x|) / |x|^{2 kappa}, with the L^{d/(2 kappa)} membership of
// Phi checked (and its integral cached) at construction.
class HomogeneousWeight {
public:
    HomogeneousWeight(WeightSpec phi, double kappa, SphereDim dim);

    const WeightSpec& phi() const noexcept { return phi_; }
    double kappa() const noexcept { return kappa_; }
    SphereDim dim() const noexcept { return dim_; }

    double lp_exponent() const noexcept { return exponent_; }  // d / (2 kappa)
    double phi_lp_integral() const noexcept { return integral_; }  // int Phi^{d/2k}
    double phi_lp_norm() const noexcept;  // ||Phi||_{d/2k}

private:
    WeightSpec phi_;
    double kappa_;
    SphereDim dim_;
    double exponent_;
    double integral_;
};

// The decreasing rearrangement of W is again homogeneous: W*(x) = c/|x|^{2k}.
struct RearrangedWeight {
    double coefficient;
};

// Lebesgue measure of {x : W(x) > t}: (1/d) t^{-d/2k} int Phi^{d/2k} dtheta.
double level_set_measure(const HomogeneousWeight& w, double t);

// c = ||Phi||_{L^{d/2k}} / |S^{d-1}|^{2k/d}.
RearrangedWeight rearranged_weight(const HomogeneousWeight& w);

// Layer-cake cross-check: for each radius r, bisect for the threshold t(r)
// whose super-level set has the measure of the radius-r ball, and compare
// against coefficient / r^{2k}.  Returns the max relative deviation.
double numeric_rearrangement_check(const HomogeneousWeight& w, std::span<const double> radii);

struct HLReport {
    bool holds = false;
    double gap = 0.0;        // rearranged sum - plain sum (>= 0 when holds)
    double plain = 0.0;      // sum w_i f_i g_i
    double rearranged = 0.0; // sum w_i f*_i g*_i
};

// Discrete Hardy-Littlewood inequality on a weighted sample line: pairing
// the decreasing rearrangements (under the same weights) never decreases the
// sum.  Ties broken by stable sort on index for determinism.
HLReport hardy_littlewood_check(std::span<const double> f_vals, std::span<const double> g_vals,
                                std::span<const double> weights);

} // namespace hardy
