#include "hardy/sphere_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "hardy/gamma.hpp"

namespace hardy {

using std::numbers::pi;

namespace {

// |S^{k-1}| for any k >= 1, no dimension guard (k = d-1 ring factors need k
// down to 1, where the public contract of surface_area does not apply).
double unchecked_area(double k) {
    return 2.0 * std::pow(pi, k / 2.0) / gamma_fn(k / 2.0);
}

} // namespace

double surface_area(SphereDim dim) {
    if (dim.value() < 2)
        throw std::domain_error("surface_area: need ambient dimension d >= 2, got d = " +
                                std::to_string(dim.value()));
    return unchecked_area(dim.value());
}

namespace {

// Nodes/weights of the n-point Gauss rule for the weight (1-t^2)^alpha on
// [-1,1] via Golub-Welsch.  The symmetric-Jacobi recurrence has zero diagonal
// and off-diagonal coefficients with simple closed forms; eigenvalues of the
// Jacobi matrix are the nodes, mu0 * (first eigenvector component)^2 the
// weights.
struct Rule1D {
    std::vector<double> t, w;
};

Rule1D gauss_jacobi_symmetric(int n, double alpha) {
    if (n < 1)
        throw std::invalid_argument("gauss_jacobi_symmetric: need n >= 1");
    if (alpha <= -1.0)
        throw std::invalid_argument("gauss_jacobi_symmetric: weight exponent must be > -1");

    const double mu0 = std::sqrt(pi) * gamma_fn(alpha + 1.0) / gamma_fn(alpha + 1.5);

    Eigen::VectorXd offdiag(std::max(0, n - 1));
    for (int k = 1; k < n; ++k) {
        double beta_k;
        if (k == 1)
            beta_k = 1.0 / (3.0 + 2.0 * alpha);
        else
            beta_k = k * (k + 2.0 * alpha) /
                     ((2.0 * k + 2.0 * alpha + 1.0) * (2.0 * k + 2.0 * alpha - 1.0));
        offdiag(k - 1) = std::sqrt(beta_k);
    }

    // nodes: eigenvalues-only tridiagonal solve (O(n^2), not the O(n^3)
    // dense path); weights: reciprocal Christoffel function at each node,
    // 1 / sum_k p_k(t)^2 over the orthonormal polynomials of degree < n
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(Eigen::VectorXd::Zero(n), offdiag, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("gauss_jacobi_symmetric: eigensolver failed");

    Rule1D r;
    r.t.resize(n);
    r.w.resize(n);
    const double p0 = 1.0 / std::sqrt(mu0);
    for (int i = 0; i < n; ++i) {
        const double t = es.eigenvalues()(i);
        r.t[i] = t;
        double pm = 0.0, pk = p0, ksum = 0.0;
        for (int k = 0; k + 1 < n; ++k) {
            ksum += pk * pk;
            const double bk = k > 0 ? offdiag(k - 1) : 0.0;
            const double pn = (t * pk - bk * pm) / offdiag(k);
            pm = pk;
            pk = pn;
        }
        ksum += pk * pk;
        r.w[i] = 1.0 / ksum;
    }
    return r;
}

void require_surface_dim(SphereDim dim, const char* who) {
    if (dim.value() < 2)
        throw std::domain_error(std::string(who) +
                                ": integration over S^{d-1} needs d >= 2, got d = " +
                                std::to_string(dim.value()));
}

} // namespace

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
    Rule1D r = gauss_jacobi_symmetric(n, 0.0);
    return {std::move(r.t), std::move(r.w)};
}

QuadratureRule axisym_rule(SphereDim dim, int n) {
    require_surface_dim(dim, "axisym_rule");
    const int d = dim.value();
    const double alpha = (d - 3) / 2.0;
    Rule1D r = gauss_jacobi_symmetric(n, alpha);
    const double ring = unchecked_area(d - 1.0);  // |S^{d-2}|

    QuadratureRule q;
    q.kind = RuleKind::axisymmetric;
    q.d = d;
    q.exact_cos_degree = 2 * n - 1;
    q.theta.resize(n);
    q.weight.resize(n);
    // eigenvalues come out ascending in t = cos(theta); flip so theta ascends
    for (int i = 0; i < n; ++i) {
        const int j = n - 1 - i;
        q.theta[i] = std::acos(std::clamp(r.t[j], -1.0, 1.0));
        q.weight[i] = ring * r.w[j];
    }
    return q;
}

QuadratureRule axisym_panel_rule(SphereDim dim, std::span<const double> breakpoints,
                                 int nodes_per_panel) {
    require_surface_dim(dim, "axisym_panel_rule");
    if (breakpoints.size() < 2)
        throw std::invalid_argument("axisym_panel_rule: need at least two breakpoints");
    if (nodes_per_panel < 1)
        throw std::invalid_argument("axisym_panel_rule: need at least one node per panel");
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
        if (!(breakpoints[i] < breakpoints[i + 1]))
            throw std::invalid_argument("axisym_panel_rule: breakpoints must be strictly increasing");
    if (breakpoints.front() < 0.0 || breakpoints.back() > pi + 1e-15)
        throw std::invalid_argument("axisym_panel_rule: breakpoints must lie in [0, pi]");

    const int d = dim.value();
    const double ring = unchecked_area(d - 1.0);
    auto [x, w] = gauss_legendre(nodes_per_panel);

    QuadratureRule q;
    q.kind = RuleKind::axisymmetric;
    q.d = d;
    q.exact_cos_degree = -1;
    for (std::size_t p = 0; p + 1 < breakpoints.size(); ++p) {
        const double a = breakpoints[p], b = breakpoints[p + 1];
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        for (int i = 0; i < nodes_per_panel; ++i) {
            const double th = mid + half * x[i];
            q.theta.push_back(th);
            q.weight.push_back(ring * half * w[i] *
                               std::pow(std::sin(th), double(d - 2)));
        }
    }
    return q;
}

QuadratureRule axisym_singular_rule(SphereDim dim, int n_smooth, double split_angle,
                                    int n_panels, int nodes_per_panel) {
    require_surface_dim(dim, "axisym_singular_rule");
    if (!(split_angle > 0.0 && split_angle < pi))
        throw std::invalid_argument("axisym_singular_rule: split angle must be in (0, pi)");
    if (n_panels < 1 || n_smooth < 1)
        throw std::invalid_argument("axisym_singular_rule: panel/node counts must be positive");

    // geometric grading toward 0 (ratio 1/2), innermost stub kept as a panel
    std::vector<double> edges;
    edges.push_back(0.0);
    for (int k = n_panels; k >= 0; --k)
        edges.push_back(split_angle * std::ldexp(1.0, -k));

    QuadratureRule graded =
        axisym_panel_rule(dim, std::span<const double>(edges), nodes_per_panel);

    // one smooth panel [split, pi] with its own node count
    const double tail_edges[2] = {split_angle, pi};
    QuadratureRule tail =
        axisym_panel_rule(dim, std::span<const double>(tail_edges, 2), n_smooth);

    graded.theta.insert(graded.theta.end(), tail.theta.begin(), tail.theta.end());
    graded.weight.insert(graded.weight.end(), tail.weight.begin(), tail.weight.end());
    return graded;
}

QuadratureRule full_s2_rule(int n_theta, int n_phi) {
    if (n_theta < 1 || n_phi < 1)
        throw std::invalid_argument("full_s2_rule: node counts must be positive");
    auto [t, wt] = gauss_legendre(n_theta);

    QuadratureRule q;
    q.kind = RuleKind::full_s2;
    q.d = 3;
    q.exact_cos_degree = -1;
    q.theta.reserve(std::size_t(n_theta) * n_phi);
    const double wphi = 2.0 * pi / n_phi;
    for (int i = 0; i < n_theta; ++i) {
        const double th = std::acos(std::clamp(t[n_theta - 1 - i], -1.0, 1.0));
        for (int j = 0; j < n_phi; ++j) {
            q.theta.push_back(th);
            q.phi.push_back(2.0 * pi * j / n_phi);
            q.weight.push_back(wt[n_theta - 1 - i] * wphi);
        }
    }
    return q;
}

double integrate(const QuadratureRule& rule, std::span<const double> samples) {
    if (samples.size() != rule.size())
        throw std::invalid_argument("integrate: sample count " + std::to_string(samples.size()) +
                                    " does not match rule size " + std::to_string(rule.size()));
    double acc = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (!std::isfinite(samples[i]))
            throw quadrature_error("integrate: non-finite integrand sample at node " +
                                       std::to_string(i) + " (theta = " +
                                       std::to_string(rule.theta[i]) + ")",
                                   i, rule.theta[i]);
        acc += rule.weight[i] * samples[i];
    }
    return acc;
}

double integrate(const QuadratureRule& rule, const std::function<double(double)>& g) {
    if (rule.kind != RuleKind::axisymmetric)
        throw std::invalid_argument("integrate(g(theta)): rule is not axisymmetric");
    std::vector<double> s(rule.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        s[i] = g(rule.theta[i]);
    return integrate(rule, s);
}

double integrate(const QuadratureRule& rule,
                 const std::function<double(double, double)>& g) {
    if (rule.kind != RuleKind::full_s2)
        throw std::invalid_argument("integrate(g(theta,phi)): rule is not a full-sphere rule");
    std::vector<double> s(rule.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        s[i] = g(rule.theta[i], rule.phi[i]);
    return integrate(rule, s);
}

} // namespace hardy
