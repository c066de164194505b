#pragma once

#include <functional>

#include <Eigen/Core>

#include "hardy/weights.hpp"

namespace hardy {

struct AlphaMuCurve;

// Orthonormal basis of the axisymmetric sector of L^2(S^{d-1}, dtheta):
// polynomials in t = cos(theta), degree 0..L, orthonormal under the full
// surface measure.  Basis function l diagonalizes the sphere Laplacian with
// eigenvalue l(l+d-2).
class SpectralBasis {
public:
    SpectralBasis(SphereDim dim, int max_degree);

    int d() const noexcept { return d_; }
    int max_degree() const noexcept { return L_; }

    // value matrix: (#thetas) x (L+1), column l = basis function l
    Eigen::MatrixXd values_at(std::span<const double> thetas) const;

    double laplacian_eigenvalue(int l) const;

private:
    int d_;
    int L_;
    double p0_;                   // constant mode = |S^{d-1}|^{-1/2}
    std::vector<double> offdiag_; // recurrence coefficients b_1..b_L
};

double laplace_beltrami_eigenvalue(int l, SphereDim dim);

struct EigenResult {
    double lambda1 = 0.0;         // lowest eigenvalue at the finer degree
    double lambda1_coarse = 0.0;  // estimate before the degree doubling
    Eigen::VectorXd coefficients; // unit eigenvector over the basis
    double residual = 0.0;        // ||(H - lambda1) v||_2
    int L_used = 0;
    int d = 0;
    bool converged = false;
};

// Matrix of the potential term: V_{lm} = int Phi b_l b_m dtheta, (L+1)^2.
Eigen::MatrixXd potential_matrix(const WeightSpec& phi, SphereDim dim, int L,
                                 const QuadratureRule& rule);

// Lowest eigenvalue of -Laplacian - Phi on S^{d-1} by Rayleigh-Ritz in the
// axisymmetric basis.  Requires Phi in L^p for some p > max(1, (d-1)/2)
// (for polar powers this means exponent < 2).  The result is converged when
// doubling the degree moved lambda1 by less than `tol`.
EigenResult lowest_eigenvalue(const WeightSpec& phi, SphereDim dim, int L,
                              const QuadratureRule& rule, double tol = 1e-8);

// Same, with internally sized quadrature (adapted to Phi, enough nodes for
// the doubled degree).
EigenResult lowest_eigenvalue(const WeightSpec& phi, SphereDim dim, int L = 64,
                              double tol = 1e-8);

// True iff lambda1 < 0.  Requires int Phi dtheta > 0 (a non-trivial
// non-negative potential always pulls the ground state below zero).
bool negativity_check(const WeightSpec& phi, const EigenResult& result);

struct BoundReport {
    double mu = 0.0;      // ||Phi||_p / |S^{d-1}|^{1/p}
    double alpha = 0.0;   // alpha(mu) from the curve
    double lambda1 = 0.0;
    double slack = 0.0;   // alpha(mu) - |lambda1|
    bool holds = false;
};

// Checks |lambda1| <= alpha(mu): the spectral bound that drives every
// compensation constant in this project.  p must lie in (max(1,(d-1)/2), inf).
BoundReport del_bound_check(const WeightSpec& phi, double p, SphereDim dim,
                            const EigenResult& result, const AlphaMuCurve& curve,
                            double tol = 1e-6);

// --- full-sphere path (d = 3), used as a cross-check of the axisymmetric
// reduction and for genuinely (theta, phi)-dependent weights ---

// Non-negative weight sampled on a (theta, phi) grid, bilinear interpolation,
// periodic in phi, constant extension in theta beyond the grid.
class TabulatedS2Weight {
public:
    TabulatedS2Weight(std::vector<double> thetas, std::vector<double> phis,
                      std::vector<double> values /* row-major theta x phi */);
    double operator()(double theta, double phi) const;

private:
    std::vector<double> th_, ph_, v_;
};

// Rayleigh-Ritz over real spherical harmonics up to degree L on S^2.
EigenResult lowest_eigenvalue_s2(const std::function<double(double, double)>& phi, int L,
                                 int n_theta = 0, int n_phi = 0, double tol = 1e-8);

} // namespace hardy
