#include "hardy/rearrangement.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hardy {

HomogeneousWeight::HomogeneousWeight(WeightSpec phi, double kappa, SphereDim dim)
    : phi_(std::move(phi)), kappa_(kappa), dim_(dim) {
    const double d = dim.value();
    if (dim.value() < 2)
        throw std::domain_error("HomogeneousWeight: need d >= 2");
    if (!(kappa > 0.0) || !(kappa < d / 2.0))
        throw std::domain_error("HomogeneousWeight: need 0 < kappa < d/2 for the "
                                "angular part to carry an L^{d/2k} norm");
    exponent_ = d / (2.0 * kappa);
    // lp_norm performs the integrability check for singular angular parts
    const double norm = lp_norm(phi_, exponent_, dim_);
    integral_ = std::pow(norm, exponent_);
}

double HomogeneousWeight::phi_lp_norm() const noexcept {
    return std::pow(integral_, 1.0 / exponent_);
}

double level_set_measure(const HomogeneousWeight& w, double t) {
    if (!(t > 0.0) || !std::isfinite(t))
        throw std::domain_error("level_set_measure: need t > 0");
    return std::pow(t, -w.lp_exponent()) * w.phi_lp_integral() / w.dim().value();
}

RearrangedWeight rearranged_weight(const HomogeneousWeight& w) {
    const double d = w.dim().value();
    return {w.phi_lp_norm() / std::pow(surface_area(w.dim()), 2.0 * w.kappa() / d)};
}

double numeric_rearrangement_check(const HomogeneousWeight& w,
                                   std::span<const double> radii) {
    if (radii.empty())
        throw std::invalid_argument("numeric_rearrangement_check: no radii given");
    const double d = w.dim().value();
    const double ball = surface_area(w.dim()) / d;  // measure of the unit ball
    const double c = rearranged_weight(w).coefficient;

    double worst = 0.0;
    for (double r : radii) {
        if (!(r > 0.0) || !std::isfinite(r))
            throw std::domain_error("numeric_rearrangement_check: radii must be > 0");
        const double target = ball * std::pow(r, d);

        // bracket the threshold whose super-level set fills the r-ball
        double t_lo = 1.0, t_hi = 1.0;
        while (level_set_measure(w, t_lo) < target) t_lo *= 0.5;
        while (level_set_measure(w, t_hi) > target) t_hi *= 2.0;
        for (int it = 0; it < 200 && (t_hi - t_lo) > 1e-15 * t_hi; ++it) {
            const double mid = 0.5 * (t_lo + t_hi);
            if (level_set_measure(w, mid) > target)
                t_lo = mid;
            else
                t_hi = mid;
        }
        const double t = 0.5 * (t_lo + t_hi);
        const double closed = c * std::pow(r, -2.0 * w.kappa());
        worst = std::max(worst, std::abs(t - closed) / closed);
    }
    return worst;
}

HLReport hardy_littlewood_check(std::span<const double> f_vals,
                                std::span<const double> g_vals,
                                std::span<const double> weights) {
    const std::size_t n = f_vals.size();
    if (n == 0 || g_vals.size() != n || weights.size() != n)
        throw std::invalid_argument("hardy_littlewood_check: need equal, nonempty "
                                    "f/g/weight arrays");
    for (std::size_t i = 0; i < n; ++i) {
        if (!(weights[i] > 0.0) || !std::isfinite(weights[i]))
            throw std::domain_error("hardy_littlewood_check: weights must be > 0");
        if (!(f_vals[i] >= 0.0) || !(g_vals[i] >= 0.0) || !std::isfinite(f_vals[i]) ||
            !std::isfinite(g_vals[i]))
            throw std::domain_error("hardy_littlewood_check: values must be finite "
                                    "and >= 0");
    }

    HLReport rep;
    for (std::size_t i = 0; i < n; ++i) rep.plain += weights[i] * f_vals[i] * g_vals[i];

    // decreasing rearrangements as step functions over the shared measure line
    struct Atom {
        double v, wt;
    };
    auto ranked = [n](std::span<const double> vals, std::span<const double> wts) {
        std::vector<Atom> a(n);
        for (std::size_t i = 0; i < n; ++i) a[i] = {vals[i], wts[i]};
        std::stable_sort(a.begin(), a.end(),
                         [](const Atom& x, const Atom& y) { return x.v > y.v; });
        return a;
    };
    const std::vector<Atom> fa = ranked(f_vals, weights);
    const std::vector<Atom> ga = ranked(g_vals, weights);

    std::size_t i = 0, j = 0;
    double fi = fa[0].wt, gj = ga[0].wt;
    while (i < n && j < n) {
        const double seg = std::min(fi, gj);
        rep.rearranged += seg * fa[i].v * ga[j].v;
        fi -= seg;
        gj -= seg;
        if (fi <= 0.0 && ++i < n) fi = fa[i].wt;
        if (gj <= 0.0 && ++j < n) gj = ga[j].wt;
    }

    rep.gap = rep.rearranged - rep.plain;
    rep.holds = rep.gap >= -1e-12 * (std::abs(rep.plain) + std::abs(rep.rearranged));
    return rep;
}

} // namespace hardy
