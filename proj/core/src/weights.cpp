#include "hardy/weights.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "hardy/gamma.hpp"

namespace hardy {

using std::numbers::pi;

namespace {

constexpr double kIntegrabilityGuard = 1e-9;

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void require_finite_nonneg(double x, const char* what) {
    if (!std::isfinite(x) || x < 0.0)
        throw std::invalid_argument(std::string("WeightSpec: ") + what +
                                    " must be finite and >= 0, got " + fmt(x));
}

// int_0^theta sin^k(t) dt by the textbook reduction; exact for integer k >= 0.
double sin_power_primitive(int k, double theta) {
    if (k == 0) return theta;
    if (k == 1) return 1.0 - std::cos(theta);
    const double s = std::sin(theta), c = std::cos(theta);
    return (-c * std::pow(s, k - 1) + (k - 1) * sin_power_primitive(k - 2, theta)) / k;
}

// measure of the cap {theta < cap_angle} in S^{d-1}
double cap_measure(int d, double cap_angle) {
    const double ring = 2.0 * std::pow(pi, (d - 1) / 2.0) / gamma_fn((d - 1) / 2.0);
    return ring * sin_power_primitive(d - 2, cap_angle);
}

} // namespace

std::string to_string(TheoremId id) {
    switch (id) {
    case TheoremId::main: return "main";
    case TheoremId::main2: return "main2";
    case TheoremId::theorem4: return "theorem4";
    case TheoremId::fractional: return "fractional";
    }
    throw std::invalid_argument("to_string: unknown TheoremId");
}

TheoremId theorem_from_string(const std::string& s) {
    if (s == "main") return TheoremId::main;
    if (s == "main2") return TheoremId::main2;
    if (s == "theorem4") return TheoremId::theorem4;
    if (s == "fractional") return TheoremId::fractional;
    throw std::invalid_argument("unknown theorem id '" + s +
                                "' (expected main|main2|theorem4|fractional)");
}

WeightSpec WeightSpec::constant(double c) {
    require_finite_nonneg(c, "constant value");
    return WeightSpec(Variant{ConstantWeight{c}});
}

WeightSpec WeightSpec::cap_indicator(double amplitude, double cap_angle) {
    require_finite_nonneg(amplitude, "cap amplitude");
    if (!(cap_angle > 0.0 && cap_angle < pi))
        throw std::invalid_argument("WeightSpec: cap angle must lie in (0, pi), got " +
                                    fmt(cap_angle));
    return WeightSpec(Variant{CapIndicatorWeight{amplitude, cap_angle}});
}

WeightSpec WeightSpec::polar_power(double amplitude, double exponent) {
    require_finite_nonneg(amplitude, "polar-power amplitude");
    require_finite_nonneg(exponent, "polar-power exponent");
    return WeightSpec(Variant{PolarPowerWeight{amplitude, exponent}});
}

WeightSpec WeightSpec::tabulated(std::vector<double> angles, std::vector<double> values) {
    if (angles.empty() || angles.size() != values.size())
        throw std::invalid_argument("WeightSpec: tabulated weight needs matching, non-empty "
                                    "angle/value lists");
    for (std::size_t i = 0; i < angles.size(); ++i) {
        if (!(angles[i] > 0.0 && angles[i] < pi))
            throw std::invalid_argument("WeightSpec: tabulated angle " + fmt(angles[i]) +
                                        " outside (0, pi)");
        if (i > 0 && !(angles[i] > angles[i - 1]))
            throw std::invalid_argument("WeightSpec: tabulated angles must be strictly "
                                        "increasing");
        require_finite_nonneg(values[i], "tabulated value");
    }
    return WeightSpec(Variant{TabulatedWeight{std::move(angles), std::move(values)}});
}

bool WeightSpec::is_singular() const noexcept {
    if (const auto* p = std::get_if<PolarPowerWeight>(&v_))
        return p->amplitude > 0.0 && p->exponent > 0.0;
    return false;
}

std::string WeightSpec::describe() const {
    return std::visit(
        [](const auto& w) -> std::string {
            using T = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<T, ConstantWeight>)
                return "constant:" + fmt(w.c);
            else if constexpr (std::is_same_v<T, CapIndicatorWeight>)
                return "cap:" + fmt(w.amplitude) + "," + fmt(w.cap_angle);
            else if constexpr (std::is_same_v<T, PolarPowerWeight>)
                return "polar_power:" + fmt(w.amplitude) + "," + fmt(w.exponent);
            else {
                std::string s = "tabulated:";
                for (std::size_t i = 0; i < w.angles.size(); ++i) {
                    if (i) s += ";";
                    s += fmt(w.angles[i]) + ":" + fmt(w.values[i]);
                }
                return s;
            }
        },
        v_);
}

double evaluate(const WeightSpec& spec, double theta) {
    if (const auto* p = std::get_if<PolarPowerWeight>(&spec.value());
        p && p->exponent > 0.0 && theta <= 0.0)
        throw singular_evaluation_error(
            "evaluate: polar-power weight is singular at theta = " + fmt(theta) +
                "; integrate with a singularity-adapted rule instead",
            theta);
    if (!(theta > 0.0 && theta <= pi + 1e-12))
        throw std::domain_error("evaluate: theta must lie in (0, pi], got " + fmt(theta));

    return std::visit(
        [theta](const auto& w) -> double {
            using T = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<T, ConstantWeight>) {
                return w.c;
            } else if constexpr (std::is_same_v<T, CapIndicatorWeight>) {
                return theta < w.cap_angle ? w.amplitude : 0.0;
            } else if constexpr (std::is_same_v<T, PolarPowerWeight>) {
                return w.amplitude * std::pow(theta, -w.exponent);
            } else {
                if (theta <= w.angles.front()) return w.values.front();
                if (theta >= w.angles.back()) return w.values.back();
                const auto it = std::upper_bound(w.angles.begin(), w.angles.end(), theta);
                const std::size_t i = std::size_t(it - w.angles.begin());
                const double t =
                    (theta - w.angles[i - 1]) / (w.angles[i] - w.angles[i - 1]);
                return (1.0 - t) * w.values[i - 1] + t * w.values[i];
            }
        },
        spec.value());
}

bool PRange::contains(double p) const noexcept {
    if (p < lower || (p == lower && !lower_closed)) return false;
    if (p > upper || (p == upper && !upper_closed)) return false;
    return true;
}

std::string PRange::describe() const {
    std::string s = to_string(theorem_id) + ": ";
    s += lower_closed ? "[" : "(";
    s += fmt(lower);
    s += ", ";
    s += std::isinf(upper) ? "inf" : fmt(upper);
    s += upper_closed ? "]" : ")";
    return s;
}

PRange theorem_p_range(TheoremId id, SphereDim dim) {
    const int d = dim.value();
    if (id == TheoremId::fractional)
        return PRange{id, 1.0, std::numeric_limits<double>::infinity(), false, false};

    if (d < 3)
        throw std::domain_error("theorem_p_range: the second-order inequalities need d >= 3, "
                                "got d = " + std::to_string(d));
    const double dm2 = d - 2.0;
    const double endpoint = dm2 * dm2 / (2.0 * (d - 1.0)) + 1.0;
    switch (id) {
    case TheoremId::main:
        return PRange{id, endpoint, std::numeric_limits<double>::infinity(), true, false};
    case TheoremId::main2:
        if (d == 3) return PRange{id, 1.0, endpoint, false, false};
        return PRange{id, (d - 1.0) / 2.0, endpoint, true, false};
    case TheoremId::theorem4:
        return PRange{id, std::max((d - 1.0) / 2.0, 1.0), endpoint, false, false};
    default:
        throw std::invalid_argument("theorem_p_range: unknown theorem id");
    }
}

QuadratureRule adapted_rule(const WeightSpec& spec, SphereDim dim, int n) {
    if (n < 2) throw std::invalid_argument("adapted_rule: need n >= 2");
    return std::visit(
        [&](const auto& w) -> QuadratureRule {
            using T = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<T, ConstantWeight>) {
                return axisym_rule(dim, n);
            } else if constexpr (std::is_same_v<T, CapIndicatorWeight>) {
                const double edges[3] = {0.0, w.cap_angle, pi};
                return axisym_panel_rule(dim, std::span<const double>(edges, 3),
                                         std::max(8, n / 2));
            } else if constexpr (std::is_same_v<T, PolarPowerWeight>) {
                if (w.exponent == 0.0 || w.amplitude == 0.0) return axisym_rule(dim, n);
                return axisym_singular_rule(dim, std::max(24, n / 2));
            } else {
                std::vector<double> edges;
                edges.push_back(0.0);
                for (double a : w.angles) edges.push_back(a);
                edges.push_back(pi);
                const int panels = int(edges.size()) - 1;
                const int per = std::clamp(n / panels, 6, 64);
                return axisym_panel_rule(dim, std::span<const double>(edges), per);
            }
        },
        spec.value());
}

namespace {

// throws if Phi^p fails to be integrable (only polar powers can fail)
void check_integrability(const WeightSpec& spec, double p, SphereDim dim) {
    const auto* w = std::get_if<PolarPowerWeight>(&spec.value());
    if (!w || w->amplitude == 0.0 || w->exponent == 0.0) return;
    const double d = dim.value();
    if (p * w->exponent > d - 1.0 - kIntegrabilityGuard) {
        const double critical = (d - 1.0) / w->exponent;
        throw not_integrable_error(
            "lp_norm: theta^{-" + fmt(w->exponent) + "} is not in L^p(S^{d-1}) for p = " +
                fmt(p) + " (needs p < " + fmt(critical) + ", d = " +
                std::to_string(dim.value()) + ")",
            critical);
    }
}

} // namespace

double lp_norm(const WeightSpec& spec, double p, SphereDim dim, const QuadratureRule& rule) {
    if (!(p >= 1.0))
        throw std::domain_error("lp_norm: need p >= 1, got " + fmt(p));
    check_integrability(spec, p, dim);

    if (const auto* w = std::get_if<ConstantWeight>(&spec.value()))
        return w->c * std::pow(surface_area(dim), 1.0 / p);
    if (const auto* w = std::get_if<CapIndicatorWeight>(&spec.value()))
        return w->amplitude * std::pow(cap_measure(dim.value(), w->cap_angle), 1.0 / p);

    const double ip = integrate(rule, [&](double th) {
        return std::pow(evaluate(spec, th), p);
    });
    return std::pow(ip, 1.0 / p);
}

double lp_norm(const WeightSpec& spec, double p, SphereDim dim, int n) {
    if (spec.is_constant() || std::holds_alternative<CapIndicatorWeight>(spec.value())) {
        // closed forms; the rule is never touched
        QuadratureRule dummy;
        dummy.d = dim.value();
        return lp_norm(spec, p, dim, dummy);
    }
    return lp_norm(spec, p, dim, adapted_rule(spec, dim, n));
}

Admissibility admissible(const WeightSpec& spec, SphereDim dim, double p, TheoremId id) {
    if (dim.value() < 3)
        throw std::domain_error("admissible: need d >= 3, got d = " +
                                std::to_string(dim.value()));
    PRange range = theorem_p_range(id, dim);
    bool ok = range.contains(p);
    if (ok) {
        try {
            check_integrability(spec, p, dim);
        } catch (const not_integrable_error&) {
            ok = false;
        }
    }
    return Admissibility{ok, range};
}

} // namespace hardy
