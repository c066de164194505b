#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "hardy/errors.hpp"

namespace hardy {

// Ambient dimension d; the sphere in play is S^{d-1} in R^d.
// Construction accepts d >= 1 (the fractional constants are meaningful down
// to d = 1); operations that integrate over S^{d-1} require d >= 2 and say so.
class SphereDim {
public:
    explicit SphereDim(int d) : d_(d) {
        if (d < 1)
            throw std::domain_error("SphereDim: ambient dimension must be >= 1, got " +
                                    std::to_string(d));
    }
    int value() const noexcept { return d_; }

    friend bool operator==(SphereDim a, SphereDim b) noexcept { return a.d_ == b.d_; }

private:
    int d_;
};

enum class RuleKind { axisymmetric, full_s2 };

// A positive quadrature rule on S^{d-1}.  Weights always contain the full
// surface measure (for axisymmetric rules this includes the |S^{d-2}| factor
// and sin^{d-2} theta), so sum(weight) == |S^{d-1}| up to roundoff.
struct QuadratureRule {
    RuleKind kind = RuleKind::axisymmetric;
    int d = 0;
    std::vector<double> theta;  // polar angle per node, in (0, pi)
    std::vector<double> phi;    // azimuth per node; empty for axisymmetric rules
    std::vector<double> weight;
    // Highest degree m such that polynomials in cos(theta) of degree <= m are
    // integrated exactly (axisymmetric rules only); -1 when no such guarantee.
    int exact_cos_degree = -1;

    std::size_t size() const noexcept { return theta.size(); }
};

// Surface measure of S^{d-1}: 2 pi^{d/2} / Gamma(d/2).  Requires d >= 2
// (the d = 1 constants handle |S^0| = 2 themselves).
double surface_area(SphereDim dim);

// Gauss-Legendre rule on [-1, 1], weights summing to 2.  Exposed because the
// panel rules and several cross-checks want raw nodes.
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n);

// n-node rule for integrals of axisymmetric functions g(theta) over S^{d-1},
// i.e. |S^{d-2}| * int_0^pi g(theta) sin^{d-2}(theta) dtheta.  Built as a
// Gauss-Jacobi rule in t = cos(theta) with symmetric exponent (d-3)/2
// (Golub-Welsch).  Exact for g polynomial in cos(theta) of degree <= 2n-1.
// Requires d >= 2.
QuadratureRule axisym_rule(SphereDim dim, int n);

// Composite Gauss-Legendre rule in theta over the panels delimited by
// `breakpoints` (strictly increasing, inside [0, pi]); the sin^{d-2} measure
// is folded into the weights.  Meant for weights with kinks or jumps: place a
// breakpoint on each kink and the rule converges at full order again.
QuadratureRule axisym_panel_rule(SphereDim dim, std::span<const double> breakpoints,
                                 int nodes_per_panel);

// Rule adapted to an integrable singularity at theta = 0: geometrically
// graded panels (ratio 1/2, `n_panels` of them) on (0, split_angle], plus a
// smooth Gauss-Jacobi section on [split_angle, pi] with n_smooth nodes.
// Defaults follow the profile that resolves theta^{-beta}, beta < d-1, to
// ~1e-12: split at 0.1, 40 panels, 12 nodes per panel.
QuadratureRule axisym_singular_rule(SphereDim dim, int n_smooth,
                                    double split_angle = 0.1, int n_panels = 40,
                                    int nodes_per_panel = 12);

// Tensor rule on S^2: Gauss-Legendre in cos(theta) x uniform in phi.
// Integrates spherical polynomials of degree <= min(2*n_theta-1, n_phi-1).
QuadratureRule full_s2_rule(int n_theta, int n_phi);

// Contract a rule against integrand samples (one per node).  Throws
// quadrature_error on the first non-finite sample.
double integrate(const QuadratureRule& rule, std::span<const double> samples);

// Convenience wrappers evaluating the integrand at the rule's nodes.
double integrate(const QuadratureRule& rule, const std::function<double(double)>& g);
double integrate(const QuadratureRule& rule,
                 const std::function<double(double, double)>& g);

} // namespace hardy
