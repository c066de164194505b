#include "hardy/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hardy/alpha_mu.hpp"
#include "hardy/errors.hpp"
#include "hardy/hardy_constants.hpp"
#include "hardy/rearrangement.hpp"
#include "hardy/spectral_sphere.hpp"

namespace hardy::cli {

namespace {

using nlohmann::json;

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string opt17(const std::optional<double>& v) { return v ? fmt17(*v) : std::string{}; }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

WeightSpec scale_weight(const WeightSpec& w, double s) {
    return std::visit(
        [&](const auto& v) -> WeightSpec {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, ConstantWeight>) {
                return WeightSpec::constant(s * v.c);
            } else if constexpr (std::is_same_v<T, CapIndicatorWeight>) {
                return WeightSpec::cap_indicator(s * v.amplitude, v.cap_angle);
            } else if constexpr (std::is_same_v<T, PolarPowerWeight>) {
                return WeightSpec::polar_power(s * v.amplitude, v.exponent);
            } else {
                std::vector<double> scaled = v.values;
                for (double& x : scaled) x *= s;
                return WeightSpec::tabulated(v.angles, scaled);
            }
        },
        w.value());
}

double parse_number(const std::string& text, const std::string& field) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("weight: field '" + field + "' is not a number: '" +
                                    text + "'");
    }
    if (used != text.size())
        throw std::invalid_argument("weight: trailing characters after '" + field +
                                    "': '" + text + "'");
    return v;
}

} // namespace

WeightSpec parse_weight(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument(
            "weight: expected <kind>:<args>, one of constant:<c>, cap:<a>,<theta_c>, "
            "polar_power:<a>,<beta>, tabulated:@<file>");
    const std::string kind = text.substr(0, colon);
    const std::string rest = text.substr(colon + 1);

    auto split2 = [&](const std::string& what) {
        const auto comma = rest.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("weight: " + kind + " needs two arguments (" +
                                        what + ")");
        return std::pair<std::string, std::string>{rest.substr(0, comma),
                                                   rest.substr(comma + 1)};
    };

    if (kind == "constant") return WeightSpec::constant(parse_number(rest, "c"));
    if (kind == "cap") {
        auto [a, th] = split2("amplitude, cap angle");
        return WeightSpec::cap_indicator(parse_number(a, "amplitude"),
                                         parse_number(th, "cap angle"));
    }
    if (kind == "polar_power") {
        auto [a, b] = split2("amplitude, exponent");
        return WeightSpec::polar_power(parse_number(a, "amplitude"),
                                       parse_number(b, "exponent"));
    }
    if (kind == "tabulated") {
        if (rest.empty() || rest[0] != '@')
            throw std::invalid_argument("weight: tabulated expects tabulated:@<file>");
        return load_weight_file(rest.substr(1));
    }
    throw std::invalid_argument("weight: unknown kind '" + kind +
                                "' (constant, cap, polar_power, tabulated)");
}

WeightSpec load_weight_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::invalid_argument("weight file: cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::invalid_argument("weight file: invalid JSON in '" + path +
                                    "': " + e.what());
    }
    if (!j.is_object() || j.value("type", "") != "tabulated")
        throw std::invalid_argument("weight file: expected {\"type\": \"tabulated\", ...}");
    if (!j.contains("angles") || !j.contains("values") || !j["angles"].is_array() ||
        !j["values"].is_array())
        throw std::invalid_argument("weight file: needs numeric arrays 'angles' and "
                                    "'values'");
    std::vector<double> angles, values;
    for (const auto& x : j["angles"]) {
        if (!x.is_number())
            throw std::invalid_argument("weight file: 'angles' must be numbers");
        angles.push_back(x.get<double>());
    }
    for (const auto& x : j["values"]) {
        if (!x.is_number())
            throw std::invalid_argument("weight file: 'values' must be numbers");
        values.push_back(x.get<double>());
    }
    return WeightSpec::tabulated(angles, values);  // validates ranges/monotonicity
}

std::string to_csv(const std::vector<HardyReport>& rows) {
    std::string out =
        "theorem_id,d,p,kappa,nu,weight_desc,lp_norm,tau,nu0,lambda1,mu,alpha,"
        "lhs,rhs,gap,holds\n";
    for (const auto& r : rows) {
        out += to_string(r.theorem_id);
        out += ',' + std::to_string(r.d);
        out += ',' + fmt17(r.p);
        out += ',' + fmt17(r.kappa);
        out += ',' + opt17(r.nu);
        out += ',' + csv_field(r.weight_desc);
        out += ',' + opt17(r.lp_norm);
        out += ',' + fmt17(r.tau);
        out += ',' + opt17(r.nu0);
        out += ',' + opt17(r.lambda1);
        out += ',' + opt17(r.mu);
        out += ',' + opt17(r.alpha);
        out += ',' + fmt17(r.lhs);
        out += ',' + fmt17(r.rhs);
        out += ',' + fmt17(r.gap);
        out += ',';
        out += r.holds ? "true" : "false";
        out += '\n';
    }
    return out;
}

namespace {

json opt_json(const std::optional<double>& v) {
    return v ? json(*v) : json(nullptr);
}

std::optional<double> opt_from(const json& j, const char* key) {
    if (!j.contains(key) || j[key].is_null()) return std::nullopt;
    return j[key].get<double>();
}

} // namespace

std::string to_json(const std::vector<HardyReport>& rows) {
    json arr = json::array();
    for (const auto& r : rows) {
        arr.push_back({{"theorem_id", to_string(r.theorem_id)},
                       {"d", r.d},
                       {"p", r.p},
                       {"kappa", r.kappa},
                       {"nu", opt_json(r.nu)},
                       {"weight_desc", r.weight_desc},
                       {"lp_norm", opt_json(r.lp_norm)},
                       {"tau", r.tau},
                       {"nu0", opt_json(r.nu0)},
                       {"lambda1", opt_json(r.lambda1)},
                       {"mu", opt_json(r.mu)},
                       {"alpha", opt_json(r.alpha)},
                       {"trial_desc", r.trial_desc},
                       {"lhs", r.lhs},
                       {"rhs", r.rhs},
                       {"gap", r.gap},
                       {"holds", r.holds}});
    }
    return arr.dump(2) + "\n";
}

std::vector<HardyReport> reports_from_json(const std::string& text) {
    json arr = json::parse(text);
    if (!arr.is_array())
        throw std::invalid_argument("report JSON: expected a top-level array");
    std::vector<HardyReport> rows;
    rows.reserve(arr.size());
    for (const auto& j : arr) {
        HardyReport r;
        r.theorem_id = theorem_from_string(j.at("theorem_id").get<std::string>());
        r.d = j.at("d").get<int>();
        r.p = j.at("p").get<double>();
        r.kappa = j.at("kappa").get<double>();
        r.nu = opt_from(j, "nu");
        r.weight_desc = j.at("weight_desc").get<std::string>();
        r.lp_norm = opt_from(j, "lp_norm");
        r.tau = j.at("tau").get<double>();
        r.nu0 = opt_from(j, "nu0");
        r.lambda1 = opt_from(j, "lambda1");
        r.mu = opt_from(j, "mu");
        r.alpha = opt_from(j, "alpha");
        r.trial_desc = j.at("trial_desc").get<std::string>();
        r.lhs = j.at("lhs").get<double>();
        r.rhs = j.at("rhs").get<double>();
        r.gap = j.at("gap").get<double>();
        r.holds = j.at("holds").get<bool>();
        rows.push_back(std::move(r));
    }
    return rows;
}

namespace {

struct Options {
    int d = 3;
    double p = 2.0;
    double kappa = 1.0;
    double nu = 1.0;
    std::string weight = "constant:1";
    std::string theorem = "main";
    int n = 0;
    int L = 24;
    int samples = 40;
    double alpha_max_factor = 40.0;
    double tau_scale = 1.0;
    // eigenvalue settling tolerance under basis doubling; discontinuous
    // weights (caps) settle like L^-3, so 1e-6 is what L ~ 24 can honestly do
    double tol = 1e-6;
    std::string output;
    std::string format = "csv";
};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw std::invalid_argument("cannot open output file: " + path);
    f << text;
}

CurveOptions curve_options(const Options& o) {
    CurveOptions c;
    c.samples = o.samples;
    c.alpha_max_factor = o.alpha_max_factor;
    return c;
}

const AlphaMuCurve& ensure_curve(std::optional<AlphaMuCurve>& curve, SphereDim dim,
                                 double p, const Options& o, double required_mu = 0.0) {
    if (!curve) curve.emplace(build_curve(dim, p, curve_options(o)));
    // inverse queries need samples reaching past the requested norm; mu(alpha)
    // is unbounded, so widening the span always gets there
    while (required_mu > 0.0 && curve->mu_max() <= required_mu * (1.0 + 1e-9)) {
        CurveOptions c = curve_options(o);
        c.alpha_max_factor =
            2.0 * curve->alpha_max() / std::max(curve->threshold(), 1.0);
        if (c.alpha_max_factor > 65536.0) break;  // let alpha_at refuse, with advice
        curve.emplace(build_curve(dim, p, c));
    }
    return *curve;
}

// one theorem's worth of pipeline rows on the standard trial battery
std::vector<HardyReport> second_order_rows(TheoremId id, const WeightSpec& w,
                                           SphereDim dim, const Options& o,
                                           std::optional<AlphaMuCurve>& curve,
                                           bool& bound_ok) {
    const double p = o.p;
    const double d = dim.value();
    const double pn = lp_norm(w, p, dim);

    HardyConstants constants;
    switch (id) {
    case TheoremId::main:
        constants = make_main_constants(dim, p, pn);
        break;
    case TheoremId::main2:
        constants = make_main2_constants(dim, p, pn);
        break;
    case TheoremId::theorem4:
        constants = make_theorem4_constants(dim, p, o.nu, pn,
                                            ensure_curve(curve, dim, p, o));
        break;
    default:
        throw std::invalid_argument("second_order_rows: not a second-order theorem");
    }
    constants.tau *= o.tau_scale;

    const WeightSpec scaled = scale_weight(w, constants.tau);
    const EigenResult eig = lowest_eigenvalue(scaled, dim, o.L, o.tol);
    if (!eig.converged)
        throw convergence_error(
            "lambda1 of -Lap - tau Phi did not settle under basis doubling",
            eig.lambda1, std::abs(eig.lambda1 - eig.lambda1_coarse), eig.L_used);

    std::optional<double> mu, alpha;
    const bool curve_ok =
        p > std::max(1.0, (d - 1.0) / 2.0) + 1e-12 ||
        (d >= 4.0 && std::abs(p - (d - 1.0) / 2.0) <= 1e-12);
    if (curve_ok) {
        const double mu_w = constants.tau * pn / std::pow(surface_area(dim), 1.0 / p);
        const BoundReport br =
            del_bound_check(scaled, p, dim, eig, ensure_curve(curve, dim, p, o, mu_w));
        mu = br.mu;
        alpha = br.alpha;
        if (!br.holds) bound_ok = false;
    }

    const std::vector<TrialFunction> battery = {
        TrialFunction::gaussian(1.0),
        TrialFunction::power_cutoff(0.01),
        TrialFunction::gaussian(1.0, BasisModeAngular{1}),
        TrialFunction::power_cutoff(0.01, EigenProfileAngular{eig.coefficients}),
    };

    std::vector<HardyReport> rows;
    rows.reserve(battery.size());
    for (const auto& trial : battery) {
        HardyReport rep = hardy_gap(trial, w, dim, p, id, constants);
        rep.lambda1 = eig.lambda1;
        rep.mu = mu;
        rep.alpha = alpha;
        rows.push_back(std::move(rep));
    }
    return rows;
}

std::optional<HardyReport> fractional_row(const WeightSpec& w, SphereDim dim,
                                          const Options& o) {
    const double d = dim.value();
    if (!(o.kappa > 0.0) || !(o.kappa < d / 2.0) || (d >= 3 && o.kappa > 1.0))
        return std::nullopt;
    const double pfr = d / (2.0 * o.kappa);
    if (!admissible(w, dim, pfr, TheoremId::fractional).ok) return std::nullopt;
    HardyConstants constants =
        make_fractional_constants(dim, o.kappa, lp_norm(w, pfr, dim));
    constants.tau *= o.tau_scale;
    return fractional_gaussian_check(dim, o.kappa, w, constants);
}

int emit_rows(const std::vector<HardyReport>& rows, bool bound_ok, const Options& o,
              std::ostream& out, std::ostream& err) {
    emit(o.format == "json" ? to_json(rows) : to_csv(rows), o.output, out);
    int failed = 0;
    for (const auto& r : rows)
        if (!r.holds) ++failed;
    if (failed > 0 || !bound_ok) {
        err << "inequality check failed: " << failed << " of " << rows.size()
            << " rows negative";
        if (!bound_ok) err << "; eigenvalue bound violated";
        err << "\n";
        return exit_inequality;
    }
    return exit_ok;
}

int cmd_tau(const Options& o, std::ostream& out) {
    const SphereDim dim(o.d);
    const WeightSpec w = parse_weight(o.weight);
    const TheoremId id = theorem_from_string(o.theorem);
    double tau = 0.0;
    switch (id) {
    case TheoremId::main:
        tau = tau_theorem_main(dim, o.p, lp_norm(w, o.p, dim));
        break;
    case TheoremId::main2:
        tau = tau_theorem2(dim, o.p, lp_norm(w, o.p, dim)).tau;
        break;
    case TheoremId::theorem4: {
        std::optional<AlphaMuCurve> curve;
        tau = tau_theorem4(dim, o.p, o.nu, lp_norm(w, o.p, dim),
                           ensure_curve(curve, dim, o.p, o));
        break;
    }
    case TheoremId::fractional: {
        double norm;
        if (o.d == 1) {
            const auto* c = std::get_if<ConstantWeight>(&w.value());
            if (!c)
                throw std::invalid_argument("tau: d = 1 supports constant weights only");
            norm = c->c * std::pow(2.0, 2.0 * o.kappa);
        } else {
            norm = lp_norm(w, o.d / (2.0 * o.kappa), dim);
        }
        tau = tau_fractional(dim, o.kappa, norm);
        break;
    }
    }
    out << fmt17(tau) << "\n";
    return exit_ok;
}

int cmd_eig(const Options& o, std::ostream& out, std::ostream& err) {
    const SphereDim dim(o.d);
    const WeightSpec w = parse_weight(o.weight);
    const EigenResult r = lowest_eigenvalue(w, dim, o.L, o.tol);
    if (!r.converged) {
        err << "eig: not converged under basis doubling: lambda1(L=" << r.L_used / 2
            << ") = " << fmt17(r.lambda1_coarse) << ", lambda1(L=" << r.L_used
            << ") = " << fmt17(r.lambda1) << "\n";
        return exit_nonconvergence;
    }
    out << fmt17(r.lambda1) << "\n";
    return exit_ok;
}

int cmd_curve(const Options& o, std::ostream& out) {
    const SphereDim dim(o.d);
    const AlphaMuCurve curve = build_curve(dim, o.p, curve_options(o));
    std::string text;
    if (o.format == "json") {
        json arr = json::array();
        for (const auto& s : curve.samples())
            arr.push_back({{"alpha", s.alpha}, {"mu", s.mu}, {"residual", s.residual}});
        text = arr.dump(2) + "\n";
    } else {
        text = "alpha,mu,residual\n";
        for (const auto& s : curve.samples())
            text += fmt17(s.alpha) + "," + fmt17(s.mu) + "," + fmt17(s.residual) + "\n";
    }
    emit(text, o.output, out);
    return exit_ok;
}

int cmd_rearrange(const Options& o, std::ostream& out) {
    const SphereDim dim(o.d);
    const WeightSpec w = parse_weight(o.weight);
    const HomogeneousWeight hw(w, o.kappa, dim);
    const RearrangedWeight rw = rearranged_weight(hw);
    const std::vector<double> radii = {0.5, 1.0, 2.0, 5.0};
    const double dev = numeric_rearrangement_check(hw, radii);
    out << "coefficient=" << fmt17(rw.coefficient) << "\n"
        << "phi_lp_norm=" << fmt17(hw.phi_lp_norm()) << "\n"
        << "lp_exponent=" << fmt17(hw.lp_exponent()) << "\n"
        << "max_relative_deviation=" << fmt17(dev) << "\n";
    return exit_ok;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    const SphereDim dim(o.d);
    const WeightSpec w = parse_weight(o.weight);
    const TheoremId id = theorem_from_string(o.theorem);

    std::vector<HardyReport> rows;
    bool bound_ok = true;
    if (id == TheoremId::fractional) {
        auto row = fractional_row(w, dim, o);
        if (!row)
            throw std::domain_error("verify: fractional mode not admissible here "
                                    "(kappa or weight integrability)");
        rows.push_back(*row);
    } else {
        const PRange range = theorem_p_range(id, dim);
        if (!range.contains(o.p))
            throw std::domain_error("verify: p = " + fmt17(o.p) +
                                    " outside the admissible window " + range.describe());
        std::optional<AlphaMuCurve> curve;
        rows = second_order_rows(id, w, dim, o, curve, bound_ok);
    }
    return emit_rows(rows, bound_ok, o, out, err);
}

int cmd_report(const Options& o, std::ostream& out, std::ostream& err) {
    const SphereDim dim(o.d);
    const WeightSpec w = parse_weight(o.weight);

    std::vector<HardyReport> rows;
    bool bound_ok = true;
    std::optional<AlphaMuCurve> curve;
    for (TheoremId id : {TheoremId::main, TheoremId::main2, TheoremId::theorem4}) {
        if (!theorem_p_range(id, dim).contains(o.p)) continue;
        if (!admissible(w, dim, o.p, id).ok) continue;
        auto part = second_order_rows(id, w, dim, o, curve, bound_ok);
        rows.insert(rows.end(), part.begin(), part.end());
    }
    if (auto fr = fractional_row(w, dim, o)) rows.push_back(*fr);
    if (rows.empty())
        throw std::domain_error("report: no theorem admits this (d, p, kappa, weight); "
                                "check the parameter windows");
    return emit_rows(rows, bound_ok, o, out, err);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"sharp Hardy inequalities with angular weights: constants, spectral "
                 "bounds and verification reports"};
    app.require_subcommand(1);
    Options o;

    auto* c_area = app.add_subcommand("area", "print |S^{d-1}|");
    c_area->add_option("--d", o.d, "ambient dimension")->required();

    auto* c_norm = app.add_subcommand("norm", "print ||Phi||_{L^p(S^{d-1})}");
    c_norm->add_option("--d", o.d)->required();
    c_norm->add_option("--p", o.p)->required();
    c_norm->add_option("--weight", o.weight)->required();
    c_norm->add_option("--n", o.n, "quadrature nodes (0 = auto)");

    auto* c_tau = app.add_subcommand("tau", "print the sharp constant tau");
    c_tau->add_option("--d", o.d)->required();
    c_tau->add_option("--p", o.p);
    c_tau->add_option("--weight", o.weight)->required();
    c_tau->add_option("--theorem", o.theorem, "main|main2|theorem4|fractional");
    c_tau->add_option("--nu", o.nu, "compensation fraction (theorem4)");
    c_tau->add_option("--kappa", o.kappa, "homogeneity order (fractional)");
    c_tau->add_option("--samples", o.samples, "curve samples (theorem4)");

    auto* c_eig = app.add_subcommand("eig", "print lambda1(-Lap_theta - Phi)");
    c_eig->add_option("--d", o.d)->required();
    c_eig->add_option("--weight", o.weight)->required();
    c_eig->add_option("--L", o.L, "basis degree (doubled internally)");
    c_eig->add_option("--tol", o.tol, "settling tolerance under basis doubling");

    auto* c_curve = app.add_subcommand("curve", "sample the alpha-mu curve");
    c_curve->add_option("--d", o.d)->required();
    c_curve->add_option("--p", o.p)->required();
    c_curve->add_option("--samples", o.samples);
    c_curve->add_option("--alpha-max-factor", o.alpha_max_factor);
    c_curve->add_option("--output", o.output);
    c_curve->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}));

    auto* c_re = app.add_subcommand("rearrange", "rearranged weight coefficient + check");
    c_re->add_option("--d", o.d)->required();
    c_re->add_option("--kappa", o.kappa)->required();
    c_re->add_option("--weight", o.weight)->required();

    auto* c_verify = app.add_subcommand("verify", "trial battery for one theorem");
    c_verify->add_option("--d", o.d)->required();
    c_verify->add_option("--p", o.p);
    c_verify->add_option("--weight", o.weight)->required();
    c_verify->add_option("--theorem", o.theorem);
    c_verify->add_option("--nu", o.nu);
    c_verify->add_option("--kappa", o.kappa);
    c_verify->add_option("--L", o.L);
    c_verify->add_option("--samples", o.samples);
    c_verify->add_option("--alpha-max-factor", o.alpha_max_factor);
    c_verify->add_option("--tau-scale", o.tau_scale,
                         "multiply tau by this factor (negative-control knob)");
    c_verify->add_option("--output", o.output);
    c_verify->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}));

    auto* c_report = app.add_subcommand("report", "full pipeline over all theorems");
    c_report->add_option("--d", o.d)->required();
    c_report->add_option("--p", o.p)->required();
    c_report->add_option("--weight", o.weight)->required();
    c_report->add_option("--nu", o.nu);
    c_report->add_option("--kappa", o.kappa);
    c_report->add_option("--L", o.L);
    c_report->add_option("--samples", o.samples);
    c_report->add_option("--alpha-max-factor", o.alpha_max_factor);
    c_report->add_option("--tau-scale", o.tau_scale,
                         "multiply every tau by this factor (negative-control knob)");
    c_report->add_option("--output", o.output);
    c_report->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}));

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("hardy");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return exit_ok;
        }
        err << "error: " << e.what() << "\n";
        return exit_validation;
    }

    try {
        if (*c_area) {
            out << fmt17(surface_area(SphereDim(o.d))) << "\n";
            return exit_ok;
        }
        if (*c_norm) {
            const WeightSpec w = parse_weight(o.weight);
            const double v = o.n > 0 ? lp_norm(w, o.p, SphereDim(o.d), o.n)
                                     : lp_norm(w, o.p, SphereDim(o.d));
            out << fmt17(v) << "\n";
            return exit_ok;
        }
        if (*c_tau) return cmd_tau(o, out);
        if (*c_eig) return cmd_eig(o, out, err);
        if (*c_curve) return cmd_curve(o, out);
        if (*c_re) return cmd_rearrange(o, out);
        if (*c_verify) return cmd_verify(o, out, err);
        if (*c_report) return cmd_report(o, out, err);
        err << "error: no command selected\n";
        return exit_validation;
    } catch (const convergence_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_nonconvergence;
    } catch (const quadrature_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_nonconvergence;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_validation;
    }
}

} // namespace hardy::cli
