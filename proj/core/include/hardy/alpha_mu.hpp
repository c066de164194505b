#pragma once

#include <Eigen/Core>

#include "hardy/spectral_sphere.hpp"
#include "hardy/weights.hpp"

namespace hardy {

// mu(alpha) = alpha holds up to this value; beyond it the curve bends below
// the diagonal.  With the endpoint flag (p = (d-1)/2, d >= 4) returns the
// wider window bound (d-1)(d-3)/2 instead of the generic (d-1)(p-1)/2.
double linear_threshold(SphereDim dim, double p, bool endpoint = false);

struct CurveSample {
    double alpha;
    double mu;
    double residual;  // Euler-Lagrange residual of the minimizer
};

// Sampled inverse curve mu(alpha) of the spectral bound, with its exact
// linear branch.  Monotone piecewise-cubic interpolation (Fritsch-Carlson)
// in log-log coordinates between samples; evaluation outside the sampled
// range is refused.
class AlphaMuCurve {
public:
    AlphaMuCurve(SphereDim dim, double p, std::vector<CurveSample> samples);

    int d() const noexcept { return d_; }
    double p() const noexcept { return p_; }
    double q() const noexcept { return 2.0 * p_ / (p_ - 1.0); }
    double threshold() const noexcept { return threshold_; }
    const std::vector<CurveSample>& samples() const noexcept { return samples_; }

    double alpha_max() const;
    double mu_max() const;

    // forward: mu(alpha); exact on [0, threshold], interpolated beyond
    double mu_at(double alpha) const;
    // inverse: alpha(mu); exact on [0, threshold], interpolated beyond
    double alpha_at(double mu) const;

private:
    double interp(double x, bool forward) const;

    int d_;
    double p_;
    double threshold_;
    std::vector<CurveSample> samples_;
    // log-log interpolation tables over the nonlinear branch
    std::vector<double> la_, lm_;        // log alpha, log mu at samples
    std::vector<double> slope_fwd_;
};

struct MuOptions {
    int degree = 64;          // basis truncation L
    int quad_nodes = 0;       // 0 = sized automatically from degree and q
    // descent stops when the L2 gradient norm drops below
    // grad_tol * max(1, energy); the Newton polish then drives the
    // stationarity residual down to 0.25 * grad_tol absolute
    double grad_tol = 2e-7;
    int max_iterations = 200000;
    // optional warm start (coefficients over SpectralBasis); padded or
    // truncated to the requested degree.  Empty = cold start.
    Eigen::VectorXd init;
};

struct MuResult {
    double mu = 0.0;
    double alpha = 0.0;
    Eigen::VectorXd coefficients; // minimizer over SpectralBasis, ||u||_q = 1
    double gradient_norm = 0.0;
    int iterations = 0;
    bool converged = false;
};

// mu(alpha) by minimizing |S|^{2/q-1} (||grad u||^2 + alpha ||u||^2) / ||u||_q^2
// over the axisymmetric sector (projected gradient descent with Armijo
// backtracking on the ||u||_q = 1 manifold, diagonally preconditioned).
// For alpha <= threshold returns the exact linear-branch value with the
// constant minimizer.  q must be subcritical: (2, 2(d-1)/(d-3)) for d >= 4,
// (2, inf) for d = 3.
MuResult mu_of_alpha(double alpha, SphereDim dim, double q, const MuOptions& opt = {});

// Independent discretization of the same minimization: second-order finite
// differences on a uniform theta-grid (flux form), driven to the ground state
// by a damped implicit fixed-point iteration.  Exists to cross-check
// mu_of_alpha; deliberately shares no code with it beyond the formulas.
struct MuFdResult {
    double mu = 0.0;
    std::vector<double> theta, values;
    int iterations = 0;
    bool converged = false;
};
MuFdResult mu_of_alpha_fd(double alpha, SphereDim dim, double q, int grid_points = 600);

// alpha(mu) through a sampled curve; refuses mu beyond the sampled range.
double alpha_of_mu(double mu, const AlphaMuCurve& curve);

// L2 norm of -Lap u + alpha u - mu |S|^{1-2/q} u^{q-1} for a ||u||_q = 1
// minimizer (the scaling on the last term is what the normalization implies:
// the constant minimizer below threshold gives exactly 0 with mu = alpha).
// Evaluated against a basis of degree `residual_degree` (0 = twice the
// coefficient degree) so truncation tail shows up in the number.
double euler_lagrange_residual(const Eigen::VectorXd& coefficients, double alpha,
                               double mu, SphereDim dim, double q,
                               int residual_degree = 0);

struct GNConstant {
    int m = 0;        // dimension of the flat problem (= d-1 upstairs)
    double q = 0.0;
    double rho = 0.0; // m(q-2)/(2q)
    double K = 0.0;   // optimal Gagliardo-Nirenberg constant
    double L1 = 0.0;  // [rho^-rho (1-rho)^-(1-rho) K]^-p, p = q/(q-2)
};

// Optimal constant of ||grad u||^rho ||u||^(1-rho) >= sqrt(K)||u||_q-type
// interpolation on R^m, from the radial ground state of -Lap w + w = w^{q-1}
// (shooting with bisection on w(0)).
GNConstant gn_constant(int m, double q);

struct SlopeReport {
    double fitted_exponent = 0.0;
    double predicted_exponent = 0.0;  // p / (p - (d-1)/2)
    double fitted_prefactor = 0.0;
    double predicted_prefactor = 0.0; // (|S^{d-1}| L1)^{1/(p-(d-1)/2)}
    int samples_used = 0;
};

// Fits log alpha against log mu over the curve's top decade and compares with
// the large-mu law alpha^{p-(d-1)/2} = L1 ||Phi||_p^p.  In the normalized
// variable mu = |S|^{-1/p} ||Phi||_p that the curve stores, the law reads
// alpha^{p-(d-1)/2} = |S^{d-1}| L1 mu^p.  Needs samples up to at least
// 20x threshold.
SlopeReport asymptotic_slope(const AlphaMuCurve& curve, const GNConstant& gn);

struct CurveOptions {
    int samples = 48;
    double alpha_max_factor = 40.0;  // geometric grid threshold .. factor*threshold
    MuOptions mu{};
};

// Samples mu(alpha) on a geometric alpha-grid and assembles the curve.
AlphaMuCurve build_curve(SphereDim dim, double p, const CurveOptions& opt = {});

} // namespace hardy
