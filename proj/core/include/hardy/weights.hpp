#pragma once

#include <string>
#include <variant>
#include <vector>

#include "hardy/sphere_geometry.hpp"

namespace hardy {

// Which inequality a p-range / admissibility question refers to.
//   main      -- full compensation, p >= (d-2)^2/(2(d-1)) + 1 (closed below)
//   main2     -- partial compensation with the linear-branch constant
//   theorem4  -- partial compensation with the curve-based constant, nu in (nu0, 1]
//   fractional-- the |x|^{-2k} / fractional-order family; the norm exponent is d/(2k)
enum class TheoremId { main, main2, theorem4, fractional };

std::string to_string(TheoremId id);
TheoremId theorem_from_string(const std::string& s);

struct ConstantWeight {
    double c;
};
struct CapIndicatorWeight {
    double amplitude;
    double cap_angle;  // the weight is amplitude on {theta < cap_angle}, 0 outside
};
struct PolarPowerWeight {
    double amplitude;
    double exponent;  // Phi(theta) = amplitude * theta^{-exponent}
};
// Piecewise-linear in theta between knots; constant extension outside
// [angles.front(), angles.back()] keeps it bounded and in every L^p.
struct TabulatedWeight {
    std::vector<double> angles;
    std::vector<double> values;
};

// Non-negative axisymmetric weight Phi on S^{d-1}.  Construction validates
// non-negativity and knot ordering; instances are immutable.
class WeightSpec {
public:
    using Variant =
        std::variant<ConstantWeight, CapIndicatorWeight, PolarPowerWeight, TabulatedWeight>;

    static WeightSpec constant(double c);
    static WeightSpec cap_indicator(double amplitude, double cap_angle);
    static WeightSpec polar_power(double amplitude, double exponent);
    static WeightSpec tabulated(std::vector<double> angles, std::vector<double> values);

    const Variant& value() const noexcept { return v_; }

    bool is_constant() const noexcept { return std::holds_alternative<ConstantWeight>(v_); }
    bool is_singular() const noexcept;  // unbounded at theta -> 0

    // Grammar used by the command-line tool and in report rows:
    // "constant:<c>", "cap:<a>,<theta_c>", "polar_power:<a>,<beta>",
    // "tabulated:<theta1>:<v1>,..."
    std::string describe() const;

private:
    explicit WeightSpec(Variant v) : v_(std::move(v)) {}
    Variant v_;
};

// Pointwise value of Phi.  theta must lie in (0, pi]; a polar-power weight at
// theta <= 0 raises singular_evaluation_error (integrate instead).
double evaluate(const WeightSpec& spec, double theta);

// Half-open/closed p-interval attached to one of the theorems.
struct PRange {
    TheoremId theorem_id;
    double lower = 1.0;
    double upper = 0.0;  // +infinity allowed
    bool lower_closed = false;
    bool upper_closed = false;

    bool contains(double p) const noexcept;
    std::string describe() const;
};

// The p-window in which the named inequality is stated.  For `fractional`
// the returned window is for the exponent d/(2*kappa), i.e. (1, +inf).
PRange theorem_p_range(TheoremId id, SphereDim dim);

// ( int Phi^p dtheta )^{1/p}.  Constant and cap weights use closed forms;
// polar-power and tabulated weights integrate with the given rule (use
// adapted_rule for a rule that actually resolves them).  polar_power needs
// p*exponent < d-1 strictly (with a 1e-9 guard band) or not_integrable_error.
double lp_norm(const WeightSpec& spec, double p, SphereDim dim, const QuadratureRule& rule);

// Same, with a rule from adapted_rule(spec, dim, n).
double lp_norm(const WeightSpec& spec, double p, SphereDim dim, int n = 128);

// Quadrature rule matched to the weight's features: panel split at a cap
// edge / tabulation knots, graded panels toward theta = 0 for polar powers,
// plain Gauss-Jacobi otherwise.  n is an approximate total node budget.
QuadratureRule adapted_rule(const WeightSpec& spec, SphereDim dim, int n = 128);

struct Admissibility {
    bool ok;
    PRange range;
};

// True iff p sits in the named theorem's window AND the weight has the
// L^p integrability that window requires.  d >= 3.
Admissibility admissible(const WeightSpec& spec, SphereDim dim, double p, TheoremId id);

} // namespace hardy
