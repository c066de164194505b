#pragma once

// Test-side numerical oracles.  Deliberately independent of the library:
// different integration scheme (adaptive Simpson + Richardson), different
// eigenvalue discretization (finite differences on a uniform grid), and a
// Petviashvili fixed-point route to the Gagliardo-Nirenberg ground state.
// Agreement between these and the library's spectral/shooting paths is what
// the dual-route checks certify; do not fold either side into the other.

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

inline constexpr double pi = 3.14159265358979323846;

// --- adaptive Simpson with Richardson acceleration --------------------------

namespace detail {

inline double simpson(double fa, double fm, double fb, double h6) {
    return h6 * (fa + 4.0 * fm + fb);
}

inline double adapt(const std::function<double(double)>& f, double a, double b,
                    double fa, double fm, double fb, double whole, double tol,
                    int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(fa, flm, fm, (m - a) / 6.0);
    const double right = simpson(fm, frm, fb, (b - m) / 6.0);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;  // Richardson of the two levels
    return adapt(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adapt(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

} // namespace detail

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12) {
    if (!(b > a)) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = detail::simpson(fa, fm, fb, (b - a) / 6.0);
    return detail::adapt(f, a, b, fa, fm, fb, whole, tol, 50);
}

// |S^{k}| for integer-like k >= 1, straight from the Gamma formula
inline double sphere_surface(double k_plus_one) {
    return 2.0 * std::pow(pi, k_plus_one / 2.0) / std::tgamma(k_plus_one / 2.0);
}

// integral over S^{d-1} of an axisymmetric g(theta); g may blow up at
// theta -> 0 as long as g(theta) sin^{d-2}(theta) stays integrable -- the
// theta = pi x^2 substitution flattens an endpoint power for the subdivision
inline double sphere_integral(const std::function<double(double)>& g, int d,
                              double tol = 1e-12) {
    if (d < 2) throw std::invalid_argument("sphere_integral: d >= 2");
    const double ring = d == 2 ? 2.0 : sphere_surface(d - 1.0);
    auto h = [&](double x) {
        if (x <= 0.0) return 0.0;  // Jacobian zero kills any integrable pole
        const double theta = pi * x * x;
        const double s = d == 2 ? 1.0 : std::pow(std::sin(theta), d - 2.0);
        return g(theta) * s * 2.0 * pi * x;
    };
    return ring * integrate(h, 0.0, 1.0, tol);
}

// --- finite-difference lowest eigenvalue on the sphere ----------------------

// lambda_1 of -u'' - (d-2) cot(theta) u' - phi(theta) u on (0, pi), via the
// flux form with sin^{d-2} weights.  Cells centered at (i+1/2)h, fluxes on the
// faces ih; the pole faces carry zero weight, which encodes the regularity
// (zero-flux) condition -- the eigenfunctions do not vanish at the poles, so
// an interior-node grid that drops the pole couplings solves the wrong problem.
inline double lambda1_fd_single(const std::function<double(double)>& phi, int d,
                                int n) {
    if (n < 8) throw std::invalid_argument("lambda1_fd_single: n >= 8");
    const double h = pi / n;
    auto sw = [&](double theta) { return std::pow(std::sin(theta), d - 2.0); };
    std::vector<double> si(n), face(n + 1, 0.0);
    for (int i = 0; i < n; ++i) si[i] = sw((i + 0.5) * h);
    for (int i = 1; i < n; ++i) face[i] = sw(i * h);  // face[0] = face[n] = 0
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        const double c = 1.0 / (h * h * si[i]);
        A(i, i) = c * (face[i] + face[i + 1]) - phi((i + 0.5) * h);
        if (i > 0) A(i, i - 1) = -c * face[i];
        if (i + 1 < n) A(i, i + 1) = -c * face[i + 1];
    }
    // symmetrize in the sin^{d-2} inner product: T = D^{1/2} A D^{-1/2},
    // D = diag(s_i); exact symmetry up to roundoff, so average the two
    Eigen::MatrixXd T = A;
    for (int r = 0; r + 1 < n; ++r) {
        const double g = std::sqrt(si[r] / si[r + 1]);
        T(r, r + 1) = 0.5 * (A(r, r + 1) * g + A(r + 1, r) / g);
        T(r + 1, r) = T(r, r + 1);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("lambda1_fd_single: eigensolver failed");
    return es.eigenvalues()(0);
}

// Richardson in h^2 over a grid doubling
inline double lambda1_fd(const std::function<double(double)>& phi, int d,
                         int n = 400) {
    const double c = lambda1_fd_single(phi, d, n);
    const double f = lambda1_fd_single(phi, d, 2 * n);
    return (4.0 * f - c) / 3.0;
}

// --- Gagliardo-Nirenberg constant via Petviashvili iteration ----------------

// Ground state of -w'' - (m-1)/r w' + w = w^{q-1} on a large ball with a
// Dirichlet edge, by the Petviashvili stabilized fixed point on a radial
// finite-difference grid; K assembled from the trajectory integrals.
inline double gn_constant_fd_single(int m, double q, double R, int n) {
    const double h = R / n;
    // Cell-centered flux scheme: unknowns live at r_i = (i+1/2)h, fluxes at the
    // faces r = ih weighted by r^{m-1}.  The r = 0 face has zero area, so the
    // symmetry condition w'(0) = 0 is built in (a node-based grid that drops the
    // origin coupling quietly pins w(0) = 0, which in 2d biases the ground state
    // by a logarithmically-decaying amount).  Dirichlet at r = R via a half-cell.
    std::vector<double> rw(n), face(n + 1);
    for (int i = 0; i < n; ++i) rw[i] = std::pow((i + 0.5) * h, m - 1.0);
    for (int i = 0; i <= n; ++i) face[i] = std::pow(i * h, m - 1.0);
    std::vector<double> dia(n), sub(n - 1), sup(n - 1);
    for (int i = 0; i < n; ++i) {
        const double c = 1.0 / (h * h * rw[i]);
        const double outer = (i == n - 1) ? 2.0 * face[n] : face[i + 1];
        dia[i] = c * (face[i] + outer) + 1.0;  // (-Lap_radial + 1)
        if (i > 0) sub[i - 1] = -c * face[i];
        if (i < n - 1) sup[i] = -c * face[i + 1];
    }
    auto thomas = [&](std::vector<double> rhs) {
        std::vector<double> c(n - 1), x(n);
        double beta = dia[0];
        x[0] = rhs[0] / beta;
        for (int i = 1; i < n; ++i) {
            c[i - 1] = sup[i - 1] / beta;
            beta = dia[i] - sub[i - 1] * c[i - 1];
            x[i] = (rhs[i] - sub[i - 1] * x[i - 1]) / beta;
        }
        for (int i = n - 2; i >= 0; --i) x[i] -= c[i] * x[i + 1];
        return x;
    };
    auto dotw = [&](const std::vector<double>& a, const std::vector<double>& b) {
        double s = 0.0;
        for (int i = 0; i < n; ++i) s += a[i] * b[i] * rw[i] * h;
        return s;
    };
    auto apply = [&](const std::vector<double>& w) {
        std::vector<double> out(n);
        for (int i = 0; i < n; ++i) {
            out[i] = dia[i] * w[i];
            if (i > 0) out[i] += sub[i - 1] * w[i - 1];
            if (i + 1 < n) out[i] += sup[i] * w[i + 1];
        }
        return out;
    };

    std::vector<double> w(n);
    for (int i = 0; i < n; ++i) {
        const double r = (i + 0.5) * h;
        w[i] = 2.2 * std::exp(-0.25 * r * r);
    }

    const double pst = (q - 1.0) / (q - 2.0);
    for (int it = 0; it < 400; ++it) {
        std::vector<double> nl(n);
        for (int i = 0; i < n; ++i)
            nl[i] = std::pow(std::max(w[i], 0.0), q - 1.0);
        const double num = dotw(w, apply(w));
        const double den = dotw(w, nl);
        if (!(den > 0.0)) throw std::runtime_error("gn oracle: lost positivity");
        const double gamma = num / den;
        std::vector<double> v = thomas(nl);
        double delta = 0.0;
        const double scale = std::pow(gamma, pst);
        for (int i = 0; i < n; ++i) {
            const double next = scale * v[i];
            delta = std::max(delta, std::abs(next - w[i]));
            w[i] = next;
        }
        if (delta < 1e-13) break;
    }

    // midpoint rule on cells; gradient panels at the interior faces plus the
    // Dirichlet half-panel at r = R (the origin face carries no area)
    double igrad = 0.0, i2 = 0.0, iq = 0.0;
    for (int i = 0; i < n; ++i) {
        i2 += w[i] * w[i] * rw[i] * h;
        iq += std::pow(std::abs(w[i]), q) * rw[i] * h;
        if (i > 0) {
            const double dw = (w[i] - w[i - 1]) / h;
            igrad += dw * dw * face[i] * h;
        }
    }
    const double dwl = (0.0 - w[n - 1]) / (0.5 * h);
    igrad += dwl * dwl * face[n] * (0.5 * h);
    const double area = sphere_surface(double(m));
    const double rho = m * (q - 2.0) / (2.0 * q);
    return std::pow(area, 1.0 - 2.0 / q) * std::pow(igrad, rho) *
           std::pow(i2, 1.0 - rho) / std::pow(iq, 2.0 / q);
}

inline double gn_constant_fd(int m, double q) {
    // Richardson in h^2 across a grid doubling on a fixed large ball
    const double c = gn_constant_fd_single(m, q, 18.0, 1500);
    const double f = gn_constant_fd_single(m, q, 18.0, 3000);
    return (4.0 * f - c) / 3.0;
}

} // namespace oracle
