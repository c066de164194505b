#include "hardy/spectral_sphere.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "hardy/alpha_mu.hpp"
#include "hardy/gamma.hpp"

namespace hardy {

using std::numbers::pi;

SpectralBasis::SpectralBasis(SphereDim dim, int max_degree) : d_(dim.value()), L_(max_degree) {
    if (d_ < 2)
        throw std::domain_error("SpectralBasis: need d >= 2");
    if (L_ < 0)
        throw std::invalid_argument("SpectralBasis: need max_degree >= 0");
    p0_ = 1.0 / std::sqrt(surface_area(dim));
    const double a = (d_ - 3) / 2.0;
    offdiag_.resize(L_);
    for (int k = 1; k <= L_; ++k) {
        double beta_k;
        if (k == 1)
            beta_k = 1.0 / (3.0 + 2.0 * a);
        else
            beta_k = k * (k + 2.0 * a) /
                     ((2.0 * k + 2.0 * a + 1.0) * (2.0 * k + 2.0 * a - 1.0));
        offdiag_[k - 1] = std::sqrt(beta_k);
    }
}

Eigen::MatrixXd SpectralBasis::values_at(std::span<const double> thetas) const {
    const auto n = static_cast<Eigen::Index>(thetas.size());
    Eigen::MatrixXd B(n, L_ + 1);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double t = std::cos(thetas[static_cast<std::size_t>(i)]);
        B(i, 0) = p0_;
        if (L_ >= 1) B(i, 1) = t * p0_ / offdiag_[0];
        for (int l = 2; l <= L_; ++l)
            B(i, l) = (t * B(i, l - 1) - offdiag_[l - 2] * B(i, l - 2)) / offdiag_[l - 1];
    }
    return B;
}

double SpectralBasis::laplacian_eigenvalue(int l) const {
    return laplace_beltrami_eigenvalue(l, SphereDim(d_));
}

double laplace_beltrami_eigenvalue(int l, SphereDim dim) {
    if (l < 0)
        throw std::invalid_argument("laplace_beltrami_eigenvalue: degree must be >= 0");
    if (dim.value() < 2)
        throw std::domain_error("laplace_beltrami_eigenvalue: need d >= 2");
    return double(l) * (l + dim.value() - 2.0);
}

Eigen::MatrixXd potential_matrix(const WeightSpec& phi, SphereDim dim, int L,
                                 const QuadratureRule& rule) {
    if (rule.kind != RuleKind::axisymmetric)
        throw std::invalid_argument("potential_matrix: need an axisymmetric rule");
    SpectralBasis basis(dim, L);
    Eigen::MatrixXd B = basis.values_at(rule.theta);
    Eigen::VectorXd wphi(B.rows());
    for (Eigen::Index i = 0; i < wphi.size(); ++i)
        wphi(i) = rule.weight[static_cast<std::size_t>(i)] *
                  evaluate(phi, rule.theta[static_cast<std::size_t>(i)]);
    return B.transpose() * wphi.asDiagonal() * B;
}

namespace {

// Phi must lie in L^p for some p > max(1, (d-1)/2) for the spectral bound to
// make sense; for theta^{-beta} weights that pins beta < 2.
void check_spectral_integrability(const WeightSpec& phi, SphereDim dim) {
    const auto* w = std::get_if<PolarPowerWeight>(&phi.value());
    if (!w || w->amplitude == 0.0 || w->exponent == 0.0) return;
    const double d = dim.value();
    const double p_min = std::max(1.0, (d - 1.0) / 2.0);
    // need beta * p < d-1 for some p > p_min, i.e. beta < (d-1)/p_min = min(d-1, 2)
    const double beta_max = (d - 1.0) / p_min;
    if (w->exponent >= beta_max - 1e-9)
        throw not_integrable_error(
            "lowest_eigenvalue: theta^{-" + std::to_string(w->exponent) +
                "} has no L^p norm with p > max(1,(d-1)/2); need exponent < " +
                std::to_string(beta_max),
            beta_max);
}

struct Solve {
    double lambda;
    Eigen::VectorXd vec;
    double residual;
};

Solve lowest_of(const Eigen::MatrixXd& H) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("lowest_eigenvalue: dense eigensolver failed");
    Solve s;
    s.lambda = es.eigenvalues()(0);
    s.vec = es.eigenvectors().col(0);
    s.residual = (H * s.vec - s.lambda * s.vec).norm();
    return s;
}

} // namespace

EigenResult lowest_eigenvalue(const WeightSpec& phi, SphereDim dim, int L,
                              const QuadratureRule& rule, double tol) {
    if (dim.value() < 3)
        throw std::domain_error("lowest_eigenvalue: need d >= 3");
    if (L < 1)
        throw std::invalid_argument("lowest_eigenvalue: need L >= 1");
    check_spectral_integrability(phi, dim);

    const int L2 = 2 * L;
    Eigen::MatrixXd H = -potential_matrix(phi, dim, L2, rule);
    for (int l = 0; l <= L2; ++l)
        H(l, l) += laplace_beltrami_eigenvalue(l, dim);

    // Rayleigh-Ritz is nested: the coarse matrix is the leading block.
    Solve coarse = lowest_of(H.topLeftCorner(L + 1, L + 1));
    Solve fine = lowest_of(H);

    EigenResult r;
    r.lambda1 = fine.lambda;
    r.lambda1_coarse = coarse.lambda;
    r.coefficients = fine.vec;
    r.residual = fine.residual;
    r.L_used = L2;
    r.d = dim.value();
    r.converged = std::abs(fine.lambda - coarse.lambda) < tol;
    return r;
}

EigenResult lowest_eigenvalue(const WeightSpec& phi, SphereDim dim, int L, double tol) {
    // size the rule for the doubled degree: basis products reach degree 4L
    QuadratureRule rule = adapted_rule(phi, dim, 8 * L + 64);
    return lowest_eigenvalue(phi, dim, L, rule, tol);
}

bool negativity_check(const WeightSpec& phi, const EigenResult& result) {
    const SphereDim dim(result.d);
    const double mass = lp_norm(phi, 1.0, dim);
    if (!(mass > 0.0))
        throw std::domain_error("negativity_check: the weight is identically zero "
                                "(int Phi dtheta = 0); the bound is vacuous there");
    return result.lambda1 < 0.0;
}

BoundReport del_bound_check(const WeightSpec& phi, double p, SphereDim dim,
                            const EigenResult& result, const AlphaMuCurve& curve,
                            double tol) {
    const double d = dim.value();
    if (d < 3)
        throw std::domain_error("del_bound_check: need d >= 3");
    const double p_min = std::max(1.0, (d - 1.0) / 2.0);
    if (!(p > p_min))
        throw std::domain_error("del_bound_check: need p > max(1,(d-1)/2) = " +
                                std::to_string(p_min));
    if (curve.d() != dim.value() || std::abs(curve.p() - p) > 1e-12)
        throw std::invalid_argument("del_bound_check: curve was built for different (d, p)");

    BoundReport rep;
    rep.lambda1 = result.lambda1;
    rep.mu = lp_norm(phi, p, dim) / std::pow(surface_area(dim), 1.0 / p);
    rep.alpha = alpha_of_mu(rep.mu, curve);
    rep.slack = rep.alpha - std::abs(result.lambda1);
    rep.holds = rep.slack >= -tol;
    return rep;
}

// --- full-sphere (d=3) path ---

TabulatedS2Weight::TabulatedS2Weight(std::vector<double> thetas, std::vector<double> phis,
                                     std::vector<double> values)
    : th_(std::move(thetas)), ph_(std::move(phis)), v_(std::move(values)) {
    if (th_.size() < 2 || ph_.size() < 2)
        throw std::invalid_argument("TabulatedS2Weight: need at least a 2x2 grid");
    if (v_.size() != th_.size() * ph_.size())
        throw std::invalid_argument("TabulatedS2Weight: value count must be "
                                    "#thetas * #phis");
    for (std::size_t i = 0; i + 1 < th_.size(); ++i)
        if (!(th_[i] < th_[i + 1]))
            throw std::invalid_argument("TabulatedS2Weight: thetas must increase");
    for (std::size_t j = 0; j + 1 < ph_.size(); ++j)
        if (!(ph_[j] < ph_[j + 1]))
            throw std::invalid_argument("TabulatedS2Weight: phis must increase");
    if (!(th_.front() > 0.0 && th_.back() < pi))
        throw std::invalid_argument("TabulatedS2Weight: thetas must lie in (0, pi)");
    if (!(ph_.front() >= 0.0 && ph_.back() < 2.0 * pi))
        throw std::invalid_argument("TabulatedS2Weight: phis must lie in [0, 2 pi)");
    for (double x : v_)
        if (!std::isfinite(x) || x < 0.0)
            throw std::invalid_argument("TabulatedS2Weight: values must be finite and >= 0");
}

double TabulatedS2Weight::operator()(double theta, double phi) const {
    const std::size_t nt = th_.size(), np = ph_.size();

    // clamp in theta (constant extension toward the poles)
    std::size_t i1;
    double s;
    if (theta <= th_.front()) {
        i1 = 0;
        s = 0.0;
    } else if (theta >= th_.back()) {
        i1 = nt - 2;
        s = 1.0;
    } else {
        i1 = std::size_t(std::upper_bound(th_.begin(), th_.end(), theta) - th_.begin()) - 1;
        s = (theta - th_[i1]) / (th_[i1 + 1] - th_[i1]);
    }

    // periodic in phi
    double ph = std::fmod(phi, 2.0 * pi);
    if (ph < 0) ph += 2.0 * pi;
    std::size_t j1;
    double t;
    if (ph < ph_.front() || ph >= ph_.back()) {
        j1 = np - 1;  // wrap segment [last, first + 2 pi)
        const double seg = ph_.front() + 2.0 * pi - ph_.back();
        const double off = ph >= ph_.back() ? ph - ph_.back() : ph + 2.0 * pi - ph_.back();
        t = off / seg;
    } else {
        j1 = std::size_t(std::upper_bound(ph_.begin(), ph_.end(), ph) - ph_.begin()) - 1;
        t = (ph - ph_[j1]) / (ph_[j1 + 1] - ph_[j1]);
    }
    const std::size_t j2 = (j1 + 1) % np;

    const double v00 = v_[i1 * np + j1], v01 = v_[i1 * np + j2];
    const double v10 = v_[(i1 + 1) * np + j1], v11 = v_[(i1 + 1) * np + j2];
    return (1 - s) * ((1 - t) * v00 + t * v01) + s * ((1 - t) * v10 + t * v11);
}

namespace {

// normalized associated Legendre P-bar_l^m(t) for all l <= L at fixed m;
// standard stable three-term recurrence on the normalized functions
void normalized_plm_column(int m, int L, double t, std::vector<double>& out) {
    out.assign(static_cast<std::size_t>(L + 1), 0.0);
    const double s2 = std::max(0.0, 1.0 - t * t);
    double pmm = 1.0 / std::sqrt(4.0 * pi);
    for (int k = 1; k <= m; ++k)
        pmm *= -std::sqrt((2.0 * k + 1.0) / (2.0 * k) * s2);
    if (m <= L) out[static_cast<std::size_t>(m)] = pmm;
    if (m + 1 <= L)
        out[static_cast<std::size_t>(m + 1)] = std::sqrt(2.0 * m + 3.0) * t * pmm;
    for (int l = m + 2; l <= L; ++l) {
        const double a = std::sqrt((4.0 * l * l - 1.0) / (double(l) * l - double(m) * m));
        const double b = std::sqrt((double(l - 1) * (l - 1) - double(m) * m) /
                                   (4.0 * double(l - 1) * (l - 1) - 1.0));
        out[static_cast<std::size_t>(l)] =
            a * (t * out[static_cast<std::size_t>(l - 1)] -
                 b * out[static_cast<std::size_t>(l - 2)]);
    }
}

Eigen::MatrixXd s2_hamiltonian(const std::function<double(double, double)>& phi, int L,
                               int n_theta, int n_phi) {
    const int nb = (L + 1) * (L + 1);
    auto [tg, wg] = gauss_legendre(n_theta);

    // basis layout: for l = 0..L, m = 0 then (cos, sin) pairs for m = 1..l
    Eigen::MatrixXd V = Eigen::MatrixXd::Zero(nb, nb);
    std::vector<double> plm((L + 1) * (L + 1), 0.0);  // per theta: [m][l]
    std::vector<double> col((std::size_t(L) + 1), 0.0);
    Eigen::VectorXd y(nb);

    const double wphi = 2.0 * pi / n_phi;
    Eigen::MatrixXd Y(n_phi, nb);  // harmonics at fixed theta over the phi ring
    Eigen::VectorXd wv(n_phi);

    for (int it = 0; it < n_theta; ++it) {
        const double t = tg[static_cast<std::size_t>(it)];
        const double theta = std::acos(std::clamp(t, -1.0, 1.0));
        for (int m = 0; m <= L; ++m) {
            normalized_plm_column(m, L, t, col);
            for (int l = m; l <= L; ++l)
                plm[static_cast<std::size_t>(m * (L + 1) + l)] =
                    col[static_cast<std::size_t>(l)];
        }
        for (int jp = 0; jp < n_phi; ++jp) {
            const double ph = 2.0 * pi * jp / n_phi;
            int idx = 0;
            for (int l = 0; l <= L; ++l) {
                Y(jp, idx++) = plm[static_cast<std::size_t>(l)];  // m = 0
                for (int m = 1; m <= l; ++m) {
                    const double pv = plm[static_cast<std::size_t>(m * (L + 1) + l)];
                    Y(jp, idx++) = std::numbers::sqrt2 * pv * std::cos(m * ph);
                    Y(jp, idx++) = std::numbers::sqrt2 * pv * std::sin(m * ph);
                }
            }
            wv(jp) = wg[static_cast<std::size_t>(it)] * wphi * phi(theta, ph);
        }
        V.noalias() += Y.transpose() * wv.asDiagonal() * Y;
    }

    Eigen::MatrixXd H = -V;
    int idx = 0;
    for (int l = 0; l <= L; ++l) {
        const double lam = double(l) * (l + 1.0);
        H(idx, idx) += lam;
        ++idx;
        for (int m = 1; m <= l; ++m) {
            H(idx, idx) += lam;
            ++idx;
            H(idx, idx) += lam;
            ++idx;
        }
    }
    return H;
}

} // namespace

EigenResult lowest_eigenvalue_s2(const std::function<double(double, double)>& phi, int L,
                                 int n_theta, int n_phi, double tol) {
    if (L < 1)
        throw std::invalid_argument("lowest_eigenvalue_s2: need L >= 1");
    const int L2 = 2 * L;
    if (n_theta <= 0) n_theta = 4 * L + 20;
    if (n_phi <= 0) n_phi = 8 * L + 21;

    Eigen::MatrixXd Hc = s2_hamiltonian(phi, L, n_theta, n_phi);
    Eigen::MatrixXd Hf = s2_hamiltonian(phi, L2, n_theta, n_phi);
    Solve coarse = lowest_of(Hc);
    Solve fine = lowest_of(Hf);

    EigenResult r;
    r.lambda1 = fine.lambda;
    r.lambda1_coarse = coarse.lambda;
    r.coefficients = fine.vec;
    r.residual = fine.residual;
    r.L_used = L2;
    r.d = 3;
    r.converged = std::abs(fine.lambda - coarse.lambda) < tol;
    return r;
}

} // namespace hardy
