#pragma once

#include <optional>
#include <string>
#include <variant>

#include <Eigen/Core>

#include "hardy/hardy_constants.hpp"
#include "hardy/spectral_sphere.hpp"
#include "hardy/weights.hpp"

namespace hardy {

// --- separable trial functions u(r, theta) = f(r) Y(theta) ---

struct GaussianProfile {
    double sigma = 1.0;  // f(r) = exp(-r^2 / (2 sigma^2))
};
// f(r) = r^{-(d-2)/2 + eps} on (0,1], r^{-(d-2)/2 - eps} on (1,inf); the
// near-optimizer family of the second-order inequalities.
struct PowerCutoffProfile {
    double eps = 0.1;
};
// Smooth bump supported on [r0, r1]: exp(-1/((r-r0)(r1-r))) scaled; radial
// integrals are done by adaptive quadrature.
struct CompactBumpProfile {
    double r0 = 0.5;
    double r1 = 2.0;
};
using RadialProfile = std::variant<GaussianProfile, PowerCutoffProfile, CompactBumpProfile>;

struct ConstantAngular {};
struct BasisModeAngular {
    int l = 1;  // single Laplacian eigenmode of degree l
};
struct EigenProfileAngular {
    Eigen::VectorXd coefficients;  // over SpectralBasis, any nonzero vector
};
using AngularPart = std::variant<ConstantAngular, BasisModeAngular, EigenProfileAngular>;

struct TrialFunction {
    RadialProfile radial;
    AngularPart angular;

    static TrialFunction gaussian(double sigma = 1.0, AngularPart a = ConstantAngular{});
    static TrialFunction power_cutoff(double eps, AngularPart a = ConstantAngular{});
    static TrialFunction compact_bump(double r0, double r1, AngularPart a = ConstantAngular{});

    std::string describe() const;
};

// One verification record; the optional fields are filled when the pipeline
// that produced the record computed them (they land in report output).
struct HardyReport {
    TheoremId theorem_id = TheoremId::main;
    int d = 0;
    double p = 0.0;
    double kappa = 1.0;
    std::optional<double> nu;
    std::string weight_desc;
    std::optional<double> lp_norm;
    double tau = 0.0;
    std::optional<double> nu0;
    std::optional<double> lambda1;
    std::optional<double> mu;
    std::optional<double> alpha;
    std::string trial_desc;
    double lhs = 0.0;
    double rhs = 0.0;
    double gap = 0.0;  // lhs - rhs
    bool holds = false;
};

// Radial integrals of a profile: int f'^2 r^{d-1} dr, int f^2 r^{d-3} dr and
// general moments int f^2 r^{d-1-2k} dr.  Closed forms for gaussian and
// power_cutoff; adaptive quadrature for bumps.  Throws not_integrable_error
// naming the divergent end when the moment does not exist.
double radial_gradient_integral(const RadialProfile& f, SphereDim dim);
double radial_moment(const RadialProfile& f, SphereDim dim, double kappa);

// Same two integrals by adaptive quadrature regardless of profile type
// (log-substituted near 0/inf so slowly-decaying power tails converge);
// exists to cross-check the closed forms.
double radial_gradient_integral_quad(const RadialProfile& f, SphereDim dim);
double radial_moment_quad(const RadialProfile& f, SphereDim dim, double kappa);

// Angular factors ||Y||^2, ||grad Y||^2 and int Phi Y^2 under dtheta.
struct AngularFactors {
    double mass = 0.0;
    double grad = 0.0;
    double weighted = 0.0;  // against Phi
};
AngularFactors angular_factors(const AngularPart& a, const WeightSpec& phi, SphereDim dim,
                               int L = 64, int quad_n = 256);

// int |grad u|^2 over R^d for separable u (exact polar split).
double dirichlet_energy(const TrialFunction& u, SphereDim dim);

// int Phi(x/|x|) |x|^{-2 kappa} u^2 over R^d.
double weighted_l2(const TrialFunction& u, const WeightSpec& phi, double kappa,
                   SphereDim dim);

// Evaluate one inequality instance on a trial function.  rhs depends on the
// mode: full compensation uses tau * weighted_l2(Phi); the partial modes add
// (1-nu)(d-2)^2/4 times the plain |x|^{-2} term.  holds <=> gap >= -1e-9 lhs.
HardyReport hardy_gap(const TrialFunction& u, const WeightSpec& phi, SphereDim dim,
                      double p, TheoremId mode, const HardyConstants& constants);

// inf over the eps-grid of the Rayleigh quotient
// dirichlet/weighted for power_cutoff trials with constant weight; approaches
// (d-2)^2/4 + eps^2 from above.
struct SharpnessProbe {
    double infimum = 0.0;
    double best_eps = 0.0;
    std::vector<double> quotients;
};
SharpnessProbe sharpness_probe(double phi_constant, SphereDim dim,
                               std::span<const double> eps_grid);

// Gap of the decomposition bound
// int |grad u|^2 >= int (tau Phi + lambda1 + (d-2)^2/4) u^2/|x|^2, with
// lambda1 the converged ground eigenvalue of -Lap - tau Phi.
double lemma_decomposition_check(const TrialFunction& u, const WeightSpec& phi, double tau,
                                 SphereDim dim, const EigenResult& lambda1_result);

// Fractional-order inequality on the unit Gaussian: closed-form lhs
// |S^{d-1}| Gamma((d+2k)/2)/2 against tau * weighted_l2.
HardyReport fractional_gaussian_check(SphereDim dim, double kappa, const WeightSpec& phi,
                                      const HardyConstants& constants);

} // namespace hardy
