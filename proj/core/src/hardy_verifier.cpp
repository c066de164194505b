#include "hardy/hardy_verifier.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>

#include "hardy/gamma.hpp"

namespace hardy {

using std::numbers::pi;

// --- trial functions ---------------------------------------------------------

TrialFunction TrialFunction::gaussian(double sigma, AngularPart a) {
    if (!(sigma > 0.0) || !std::isfinite(sigma))
        throw std::invalid_argument("gaussian trial: need sigma > 0");
    return {GaussianProfile{sigma}, std::move(a)};
}

TrialFunction TrialFunction::power_cutoff(double eps, AngularPart a) {
    if (!(eps > 0.0) || !std::isfinite(eps))
        throw std::invalid_argument("power_cutoff trial: need eps > 0");
    return {PowerCutoffProfile{eps}, std::move(a)};
}

TrialFunction TrialFunction::compact_bump(double r0, double r1, AngularPart a) {
    if (!(r0 > 0.0) || !(r1 > r0) || !std::isfinite(r1))
        throw std::invalid_argument("compact_bump trial: need 0 < r0 < r1");
    return {CompactBumpProfile{r0, r1}, std::move(a)};
}

namespace {

std::string fmt_g(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

} // namespace

std::string TrialFunction::describe() const {
    std::string s = std::visit(
        [](const auto& f) -> std::string {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, GaussianProfile>)
                return "gaussian:" + fmt_g(f.sigma);
            else if constexpr (std::is_same_v<T, PowerCutoffProfile>)
                return "power_cutoff:" + fmt_g(f.eps);
            else
                return "compact_bump:" + fmt_g(f.r0) + "," + fmt_g(f.r1);
        },
        radial);
    s += std::visit(
        [](const auto& a) -> std::string {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, ConstantAngular>)
                return std::string{};
            else if constexpr (std::is_same_v<T, BasisModeAngular>)
                return "*mode:" + std::to_string(a.l);
            else
                return "*profile[" + std::to_string(a.coefficients.size() - 1) + "]";
        },
        angular);
    return s;
}

// --- radial machinery ---------------------------------------------------------

namespace {

double bump_value(const CompactBumpProfile& b, double r) {
    const double s1 = r - b.r0, s2 = b.r1 - r;
    if (s1 <= 0.0 || s2 <= 0.0) return 0.0;
    const double t = s1 * s2;
    if (1.0 / t > 700.0) return 0.0;  // below double range anyway
    return std::exp(-1.0 / t);
}

double bump_derivative(const CompactBumpProfile& b, double r) {
    const double s1 = r - b.r0, s2 = b.r1 - r;
    if (s1 <= 0.0 || s2 <= 0.0) return 0.0;
    const double t = s1 * s2;
    if (1.0 / t > 700.0) return 0.0;
    return (s2 - s1) / (t * t) * std::exp(-1.0 / t);
}

double profile_value(const RadialProfile& f, double r, int d) {
    return std::visit(
        [&](const auto& pf) -> double {
            using T = std::decay_t<decltype(pf)>;
            if constexpr (std::is_same_v<T, GaussianProfile>) {
                return std::exp(-r * r / (2.0 * pf.sigma * pf.sigma));
            } else if constexpr (std::is_same_v<T, PowerCutoffProfile>) {
                const double a = (d - 2.0) / 2.0;
                return r <= 1.0 ? std::pow(r, -a + pf.eps) : std::pow(r, -a - pf.eps);
            } else {
                return bump_value(pf, r);
            }
        },
        f);
}

double profile_derivative(const RadialProfile& f, double r, int d) {
    return std::visit(
        [&](const auto& pf) -> double {
            using T = std::decay_t<decltype(pf)>;
            if constexpr (std::is_same_v<T, GaussianProfile>) {
                const double s2 = pf.sigma * pf.sigma;
                return -r / s2 * std::exp(-r * r / (2.0 * s2));
            } else if constexpr (std::is_same_v<T, PowerCutoffProfile>) {
                const double a = (d - 2.0) / 2.0;
                return r <= 1.0 ? (-a + pf.eps) * std::pow(r, -a + pf.eps - 1.0)
                                : (-a - pf.eps) * std::pow(r, -a - pf.eps - 1.0);
            } else {
                return bump_derivative(pf, r);
            }
        },
        f);
}

// f(r) * r^half and f'(r) * r^half for the substituted quadratures.  The
// log substitution pushes r to e^{+-large}, where a power-law factor can
// overflow before the (small, representable) product is formed: fold the
// exponents for the power profile, and for the others short-circuit once the
// profile itself has underflowed -- past that point the true integrand is
// zero to double precision no matter how large r^half is.
double weighted_value(const RadialProfile& f, double r, int d, double half) {
    if (const auto* pp = std::get_if<PowerCutoffProfile>(&f)) {
        const double a = (d - 2.0) / 2.0;
        return r <= 1.0 ? std::pow(r, -a + pp->eps + half)
                        : std::pow(r, -a - pp->eps + half);
    }
    const double v = profile_value(f, r, d);
    if (v == 0.0) return 0.0;
    return v * std::pow(r, half);
}

double weighted_derivative(const RadialProfile& f, double r, int d, double half) {
    if (const auto* pp = std::get_if<PowerCutoffProfile>(&f)) {
        const double a = (d - 2.0) / 2.0;
        return r <= 1.0 ? (-a + pp->eps) * std::pow(r, -a + pp->eps - 1.0 + half)
                        : (-a - pp->eps) * std::pow(r, -a - pp->eps - 1.0 + half);
    }
    const double fp = profile_derivative(f, r, d);
    if (fp == 0.0) return 0.0;
    return fp * std::pow(r, half);
}

// adaptive Simpson; tolerances are absolute
double asimp(const std::function<double(double)>& f, double a, double m, double b,
             double fa, double fm, double fb, double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return asimp(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           asimp(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol) {
    if (!(b > a)) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return asimp(f, a, m, b, fa, fm, fb, whole, tol, 48);
}

// integral over [0, inf) of a decaying integrand, on geometric panels; keeps
// going until several consecutive panels stop contributing
double decaying_integral(const std::function<double(double)>& g) {
    double total = adaptive_simpson(g, 0.0, 1.0, 1e-15);
    double lo = 1.0;
    int quiet = 0;
    while (lo < 1e14 && quiet < 3) {
        const double hi = 2.0 * lo;
        const double part =
            adaptive_simpson(g, lo, hi, 1e-15 * std::max(1.0, std::abs(total)));
        total += part;
        if (std::abs(part) <= 1e-15 * std::max(std::abs(total), 1e-300))
            ++quiet;
        else
            quiet = 0;
        lo = hi;
    }
    return total;
}

// shared existence checks so both evaluation routes refuse the same inputs
void check_gaussian_moment(int d, double kappa) {
    if (!(d - 1.0 - 2.0 * kappa > -1.0))
        throw not_integrable_error(
            "gaussian radial moment diverges at r = 0: need kappa < d/2", d / 2.0);
}

void check_power_cutoff_moment(double eps, double kappa) {
    if (kappa >= 1.0 + eps)
        throw not_integrable_error(
            "power_cutoff radial moment diverges at r = 0: need kappa < 1 + eps",
            1.0 + eps);
    if (kappa <= 1.0 - eps)
        throw not_integrable_error(
            "power_cutoff radial moment diverges at r = inf: need kappa > 1 - eps",
            1.0 - eps);
}

constexpr double kBumpTol = 1e-15;

} // namespace

double radial_gradient_integral(const RadialProfile& f, SphereDim dim) {
    const int d = dim.value();
    if (d < 2)
        throw std::domain_error("radial_gradient_integral: need d >= 2");
    return std::visit(
        [&](const auto& pf) -> double {
            using T = std::decay_t<decltype(pf)>;
            if constexpr (std::is_same_v<T, GaussianProfile>) {
                return 0.5 * std::pow(pf.sigma, d - 2.0) * gamma_fn((d + 2.0) / 2.0);
            } else if constexpr (std::is_same_v<T, PowerCutoffProfile>) {
                const double a = (d - 2.0) / 2.0;
                return (a * a + pf.eps * pf.eps) / pf.eps;
            } else {
                auto h = [&](double r) {
                    const double fp = bump_derivative(pf, r);
                    return fp * fp * std::pow(r, d - 1.0);
                };
                return adaptive_simpson(h, pf.r0, pf.r1, kBumpTol);
            }
        },
        f);
}

double radial_moment(const RadialProfile& f, SphereDim dim, double kappa) {
    const int d = dim.value();
    if (d < 2)
        throw std::domain_error("radial_moment: need d >= 2");
    return std::visit(
        [&](const auto& pf) -> double {
            using T = std::decay_t<decltype(pf)>;
            if constexpr (std::is_same_v<T, GaussianProfile>) {
                check_gaussian_moment(d, kappa);
                const double k = d - 1.0 - 2.0 * kappa;
                // int r^k exp(-r^2/sigma^2) = sigma^{k+1} Gamma((k+1)/2) / 2
                return 0.5 * std::pow(pf.sigma, k + 1.0) * gamma_fn((k + 1.0) / 2.0);
            } else if constexpr (std::is_same_v<T, PowerCutoffProfile>) {
                check_power_cutoff_moment(pf.eps, kappa);
                return 0.5 / (1.0 + pf.eps - kappa) + 0.5 / (kappa - 1.0 + pf.eps);
            } else {
                auto h = [&](double r) {
                    const double v = bump_value(pf, r);
                    return v * v * std::pow(r, d - 1.0 - 2.0 * kappa);
                };
                return adaptive_simpson(h, pf.r0, pf.r1, kBumpTol);
            }
        },
        f);
}

double radial_gradient_integral_quad(const RadialProfile& f, SphereDim dim) {
    const int d = dim.value();
    if (d < 2)
        throw std::domain_error("radial_gradient_integral_quad: need d >= 2");
    if (const auto* pf = std::get_if<CompactBumpProfile>(&f)) {
        // split at the midpoint instead of the closed-form route's single span
        auto h = [&](double r) {
            const double fp = bump_derivative(*pf, r);
            return fp * fp * std::pow(r, d - 1.0);
        };
        const double mid = 0.5 * (pf->r0 + pf->r1);
        return adaptive_simpson(h, pf->r0, mid, kBumpTol) +
               adaptive_simpson(h, mid, pf->r1, kBumpTol);
    }
    // after r = e^{+-s} the integrand is (f'(r) r^{d/2})^2: square the
    // combined factor so no intermediate outgrows the result
    auto inner = [&](double s) {
        const double t = weighted_derivative(f, std::exp(-s), d, 0.5 * d);
        return t * t;
    };
    auto outer = [&](double s) {
        const double t = weighted_derivative(f, std::exp(s), d, 0.5 * d);
        return t * t;
    };
    return decaying_integral(inner) + decaying_integral(outer);
}

double radial_moment_quad(const RadialProfile& f, SphereDim dim, double kappa) {
    const int d = dim.value();
    if (d < 2)
        throw std::domain_error("radial_moment_quad: need d >= 2");
    if (const auto* pg = std::get_if<GaussianProfile>(&f)) {
        (void)pg;
        check_gaussian_moment(d, kappa);
    }
    if (const auto* pp = std::get_if<PowerCutoffProfile>(&f))
        check_power_cutoff_moment(pp->eps, kappa);
    if (const auto* pf = std::get_if<CompactBumpProfile>(&f)) {
        auto h = [&](double r) {
            const double v = bump_value(*pf, r);
            return v * v * std::pow(r, d - 1.0 - 2.0 * kappa);
        };
        const double mid = 0.5 * (pf->r0 + pf->r1);
        return adaptive_simpson(h, pf->r0, mid, kBumpTol) +
               adaptive_simpson(h, mid, pf->r1, kBumpTol);
    }
    const double half = 0.5 * (d - 2.0 * kappa);
    auto inner = [&](double s) {
        const double t = weighted_value(f, std::exp(-s), d, half);
        return t * t;
    };
    auto outer = [&](double s) {
        const double t = weighted_value(f, std::exp(s), d, half);
        return t * t;
    };
    return decaying_integral(inner) + decaying_integral(outer);
}

// --- angular machinery ---------------------------------------------------------

namespace {

// ||Y||^2 and ||grad Y||^2 need no quadrature: the basis is orthonormal with
// known Laplacian eigenvalues
std::pair<double, double> angular_mass_grad(const AngularPart& a, SphereDim dim) {
    return std::visit(
        [&](const auto& ang) -> std::pair<double, double> {
            using T = std::decay_t<decltype(ang)>;
            if constexpr (std::is_same_v<T, ConstantAngular>) {
                return {surface_area(dim), 0.0};
            } else if constexpr (std::is_same_v<T, BasisModeAngular>) {
                return {1.0, laplace_beltrami_eigenvalue(ang.l, dim)};
            } else {
                if (ang.coefficients.size() == 0 || ang.coefficients.norm() == 0.0)
                    throw std::invalid_argument("angular profile: zero coefficient vector");
                double mass = 0.0, grad = 0.0;
                for (Eigen::Index l = 0; l < ang.coefficients.size(); ++l) {
                    const double c2 = ang.coefficients(l) * ang.coefficients(l);
                    mass += c2;
                    grad += c2 * laplace_beltrami_eigenvalue(int(l), dim);
                }
                return {mass, grad};
            }
        },
        a);
}

} // namespace

AngularFactors angular_factors(const AngularPart& a, const WeightSpec& phi, SphereDim dim,
                               int L, int quad_n) {
    AngularFactors out;
    std::tie(out.mass, out.grad) = angular_mass_grad(a, dim);

    if (std::holds_alternative<ConstantAngular>(a)) {
        out.weighted = lp_norm(phi, 1.0, dim);  // int Phi, since Phi >= 0
        return out;
    }

    const int Lc = std::holds_alternative<BasisModeAngular>(a)
                       ? std::get<BasisModeAngular>(a).l
                       : int(std::get<EigenProfileAngular>(a).coefficients.size()) - 1;
    if (Lc < 0)
        throw std::invalid_argument("angular_factors: invalid mode degree");
    const int n = std::max(quad_n, 4 * std::max(Lc, L) + 32);
    const QuadratureRule rule = adapted_rule(phi, dim, n);
    SpectralBasis basis(dim, Lc);
    const Eigen::MatrixXd B = basis.values_at(rule.theta);

    Eigen::VectorXd y;
    if (const auto* mode = std::get_if<BasisModeAngular>(&a))
        y = B.col(mode->l);
    else
        y = B * std::get<EigenProfileAngular>(a).coefficients;

    double acc = 0.0;
    for (Eigen::Index i = 0; i < y.size(); ++i)
        acc += rule.weight[static_cast<std::size_t>(i)] *
               evaluate(phi, rule.theta[static_cast<std::size_t>(i)]) * y(i) * y(i);
    out.weighted = acc;
    return out;
}

double dirichlet_energy(const TrialFunction& u, SphereDim dim) {
    const auto [mass, grad] = angular_mass_grad(u.angular, dim);
    double e = radial_gradient_integral(u.radial, dim) * mass;
    if (grad > 0.0) e += radial_moment(u.radial, dim, 1.0) * grad;
    return e;
}

double weighted_l2(const TrialFunction& u, const WeightSpec& phi, double kappa,
                   SphereDim dim) {
    const double radial = radial_moment(u.radial, dim, kappa);
    const AngularFactors af = angular_factors(u.angular, phi, dim);
    return radial * af.weighted;
}

HardyReport hardy_gap(const TrialFunction& u, const WeightSpec& phi, SphereDim dim,
                      double p, TheoremId mode, const HardyConstants& constants) {
    if (mode == TheoremId::fractional)
        throw std::invalid_argument("hardy_gap: the fractional mode is evaluated by "
                                    "fractional_gaussian_check");
    if (dim.value() < 3)
        throw std::domain_error("hardy_gap: need d >= 3");
    if (constants.theorem_id != mode || constants.d != dim.value())
        throw std::invalid_argument("hardy_gap: constants carry a different mode or d");

    HardyReport rep;
    rep.theorem_id = mode;
    rep.d = dim.value();
    rep.p = p;
    rep.kappa = 1.0;
    rep.nu = constants.nu;
    rep.weight_desc = phi.describe();
    rep.lp_norm = lp_norm(phi, p, dim);
    rep.tau = constants.tau;
    rep.nu0 = constants.nu0;
    rep.trial_desc = u.describe();

    rep.lhs = dirichlet_energy(u, dim);
    rep.rhs = constants.tau * weighted_l2(u, phi, 1.0, dim);
    if (mode != TheoremId::main) {
        double nu_eff;
        if (mode == TheoremId::main2) {
            if (!constants.nu0)
                throw std::invalid_argument("hardy_gap: partial mode needs nu0");
            nu_eff = *constants.nu0;
        } else {
            if (!constants.nu)
                throw std::invalid_argument("hardy_gap: nu-parametrized mode needs nu");
            nu_eff = *constants.nu;
        }
        const double d = dim.value();
        const double plain = radial_moment(u.radial, dim, 1.0) *
                             angular_mass_grad(u.angular, dim).first;
        rep.rhs += (1.0 - nu_eff) * (d - 2.0) * (d - 2.0) / 4.0 * plain;
    }
    rep.gap = rep.lhs - rep.rhs;
    rep.holds = rep.gap >= -1e-9 * std::abs(rep.lhs);
    return rep;
}

SharpnessProbe sharpness_probe(double phi_constant, SphereDim dim,
                               std::span<const double> eps_grid) {
    if (!(phi_constant > 0.0))
        throw std::domain_error("sharpness_probe: need a positive constant weight");
    if (eps_grid.empty())
        throw std::invalid_argument("sharpness_probe: empty eps grid");
    const WeightSpec phi = WeightSpec::constant(phi_constant);

    SharpnessProbe probe;
    probe.infimum = std::numeric_limits<double>::infinity();
    probe.quotients.reserve(eps_grid.size());
    for (double eps : eps_grid) {
        const TrialFunction t = TrialFunction::power_cutoff(eps);
        const double q = dirichlet_energy(t, dim) / weighted_l2(t, phi, 1.0, dim);
        probe.quotients.push_back(q);
        if (q < probe.infimum) {
            probe.infimum = q;
            probe.best_eps = eps;
        }
    }
    return probe;
}

double lemma_decomposition_check(const TrialFunction& u, const WeightSpec& phi, double tau,
                                 SphereDim dim, const EigenResult& lambda1_result) {
    if (!(tau > 0.0))
        throw std::domain_error("lemma_decomposition_check: need tau > 0");
    if (lambda1_result.d != dim.value())
        throw std::invalid_argument("lemma_decomposition_check: eigenvalue result is "
                                    "for a different d");
    if (!lambda1_result.converged)
        throw convergence_error(
            "lemma_decomposition_check: lambda1 did not converge; refusing to certify",
            lambda1_result.lambda1,
            std::abs(lambda1_result.lambda1 - lambda1_result.lambda1_coarse),
            lambda1_result.L_used);

    const double d = dim.value();
    const double lhs = dirichlet_energy(u, dim);
    const double weighted = weighted_l2(u, phi, 1.0, dim);
    const double plain =
        radial_moment(u.radial, dim, 1.0) * angular_mass_grad(u.angular, dim).first;
    const double rhs =
        tau * weighted +
        (lambda1_result.lambda1 + (d - 2.0) * (d - 2.0) / 4.0) * plain;
    return lhs - rhs;
}

HardyReport fractional_gaussian_check(SphereDim dim, double kappa, const WeightSpec& phi,
                                      const HardyConstants& constants) {
    const int d = dim.value();
    if (constants.theorem_id != TheoremId::fractional || constants.d != d ||
        std::abs(constants.kappa - kappa) > 1e-12)
        throw std::invalid_argument("fractional_gaussian_check: constants do not match "
                                    "(d, kappa, fractional mode)");
    if (!(kappa > 0.0) || !(kappa < d / 2.0))
        throw std::domain_error("fractional_gaussian_check: need 0 < kappa < d/2");

    double int_phi, norm;
    double area;
    if (d == 1) {
        const auto* c = std::get_if<ConstantWeight>(&phi.value());
        if (!c)
            throw std::invalid_argument("fractional_gaussian_check: d = 1 supports "
                                        "constant weights only (S^0 is two points)");
        area = 2.0;
        int_phi = 2.0 * c->c;
        norm = c->c * std::pow(2.0, 2.0 * kappa / d);
    } else {
        area = surface_area(dim);
        int_phi = lp_norm(phi, 1.0, dim);
        norm = lp_norm(phi, d / (2.0 * kappa), dim);
    }

    HardyReport rep;
    rep.theorem_id = TheoremId::fractional;
    rep.d = d;
    rep.p = d / (2.0 * kappa);
    rep.kappa = kappa;
    rep.weight_desc = phi.describe();
    rep.lp_norm = norm;
    rep.tau = constants.tau;
    rep.trial_desc = "gaussian:1";

    // quadratic form of the order-2kappa operator on exp(-|x|^2/2), via the
    // Fourier side; the weighted term pairs exp(-r^2) with r^{-2 kappa}
    rep.lhs = area * 0.5 * gamma_fn((d + 2.0 * kappa) / 2.0);
    rep.rhs = constants.tau * 0.5 * gamma_fn((d - 2.0 * kappa) / 2.0) * int_phi;
    rep.gap = rep.lhs - rep.rhs;
    rep.holds = rep.gap >= -1e-9 * std::abs(rep.lhs);
    return rep;
}

} // namespace hardy
