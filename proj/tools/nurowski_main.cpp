// Command-line front end: verification suites over the Chazy / Nurowski
// machinery with JSON, CSV and plain-text reports.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nurowski/cases.hpp"
#include "nurowski/curvature.hpp"
#include "nurowski/verify.hpp"

using json = nlohmann::ordered_json;
using namespace nurowski;

namespace {

constexpr const char* kVersion = "1.0.0";

struct ResultRow {
    std::string name;
    json residuals;  // named maxima
    bool pass = true;
    json extra;      // command-specific payload
};

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

struct Output {
    json config;
    std::vector<ResultRow> results;
    CsvTable csv;
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw DomainError("cannot parse rational: " + text);
    }
}

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

Side parse_side(const std::string& s) {
    if (s == "direct") return Side::direct;
    if (s == "dual") return Side::dual;
    throw DomainError("side must be 'direct' or 'dual'");
}

int emit(const Output& out, const std::string& format, const std::string& path) {
    bool all_pass = true;
    for (const auto& r : out.results) all_pass = all_pass && r.pass;

    std::string text;
    if (format == "json") {
        json doc;
        doc["config"] = out.config;
        json results = json::array();
        for (const auto& r : out.results) {
            json item;
            item["case"] = r.name;
            item["max_residuals"] = r.residuals;
            item["pass"] = r.pass;
            if (!r.extra.is_null()) item["detail"] = r.extra;
            results.push_back(item);
        }
        doc["results"] = results;
        doc["version"] = kVersion;
        text = doc.dump(2) + "\n";
    } else if (format == "csv") {
        std::ostringstream os;
        for (std::size_t i = 0; i < out.csv.header.size(); ++i)
            os << (i ? "," : "") << out.csv.header[i];
        os << "\n";
        for (const auto& row : out.csv.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
            os << "\n";
        }
        text = os.str();
    } else {
        std::ostringstream os;
        for (const auto& r : out.results) {
            os << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
            for (const auto& [key, val] : r.residuals.items())
                os << "  " << key << "=" << (val.is_number() ? fmt(val.get<double>())
                                                            : val.dump());
            os << "\n";
        }
        text = os.str();
    }

    if (path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(path);
        if (!f) throw DomainError("cannot open output path: " + path);
        f << text;
    }
    return all_pass ? 0 : 1;
}

Output run_pell(const std::string& family, int count) {
    PellFamily fam = (family == "direct") ? PellFamily::direct : PellFamily::dual;
    if (family != "direct" && family != "dual")
        throw DomainError("family must be 'direct' or 'dual'");
    Output out;
    out.config = {{"command", "pell"}, {"family", family}, {"count", count}};
    out.csv.header = {"index", "big", "small", "identity"};
    for (const auto& p : pell_enumerate(fam, count)) {
        ResultRow row;
        row.name = family + "[" + std::to_string(p.index) + "]";
        bool ok = pell_identity_holds(fam, p);
        row.residuals = {{"identity_defect", ok ? 0.0 : 1.0}};
        row.pass = ok;
        row.extra = {{"big", p.big.str()}, {"small", p.small.str()}};
        out.results.push_back(row);
        out.csv.rows.push_back({std::to_string(p.index), p.big.str(), p.small.str(),
                                ok ? "1" : "0"});
    }
    return out;
}

Output run_chazy_pair(const std::string& side_s, const std::string& k_s) {
    Side side = parse_side(side_s);
    Rational k = parse_rational(k_s);
    auto kt = chazy_pair(side, k);
    Output out;
    out.config = {{"command", "chazy-pair"}, {"side", side_s}, {"k", k_s}};
    ResultRow row;
    row.name = side_s + " k=" + k_s;
    row.residuals = json::object();
    row.pass = true;
    row.extra = {{"k_tilde_exact", kt.exact},
                 {"k_tilde", kt.exact ? rational_str(kt.value) : std::string("")},
                 {"k_tilde_approx", kt.approx}};
    out.results.push_back(row);
    out.csv.header = {"side", "k", "exact", "k_tilde", "k_tilde_approx"};
    out.csv.rows.push_back({side_s, k_s, kt.exact ? "1" : "0",
                            kt.exact ? rational_str(kt.value) : "", fmt(kt.approx)});
    return out;
}

Output run_param_map(const std::string& side_s, int case_index) {
    Output out;
    out.config = {{"command", "param-map"}, {"side", side_s}, {"case", case_index}};
    out.csv.header = {"case", "side", "alpha", "beta", "gamma",
                      "alpha_t", "beta_t", "gamma_t", "k", "k_tilde", "pass"};
    const auto& cases = golden_cases();
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto& pc = cases[i];
        std::string pc_side = (pc.side == Side::direct) ? "direct" : "dual";
        if (!side_s.empty() && pc_side != side_s) continue;
        if (case_index >= 0 && static_cast<std::size_t>(case_index) != i) continue;
        auto tt = tilde_triple(pc.side, pc.k, pc.combination, pc.abg);
        auto kt = chazy_pair(pc.side, pc.k);
        bool ok = tt.exact && tt.value == pc.abg_tilde && kt.exact && kt.value == pc.k_tilde;
        ResultRow row;
        row.name = "case " + std::to_string(i) + " (" + pc_side + ")";
        row.residuals = {{"exact_mismatch", ok ? 0.0 : 1.0}};
        row.pass = ok;
        row.extra = {
            {"weights", {pc.combination.weights[0], pc.combination.weights[1],
                         pc.combination.weights[2]}},
            {"abg", {rational_str(pc.abg.alpha), rational_str(pc.abg.beta),
                     rational_str(pc.abg.gamma)}},
            {"abg_tilde", {rational_str(tt.value.alpha), rational_str(tt.value.beta),
                           rational_str(tt.value.gamma)}},
            {"k", rational_str(pc.k)},
            {"k_tilde", rational_str(kt.value)}};
        out.results.push_back(row);
        out.csv.rows.push_back({std::to_string(i), pc_side, rational_str(pc.abg.alpha),
                                rational_str(pc.abg.beta), rational_str(pc.abg.gamma),
                                rational_str(tt.value.alpha), rational_str(tt.value.beta),
                                rational_str(tt.value.gamma), rational_str(pc.k),
                                rational_str(kt.value), ok ? "1" : "0"});
    }
    if (out.results.empty()) throw DomainError("no matching parameter-map case");
    return out;
}

Output run_noth_check(const std::string& side_s, const std::string& family_s, int points,
                      std::uint64_t seed, double tol) {
    Side side = parse_side(side_s);
    FunctionSpec fam = parse_function_spec(family_s);
    Output out;
    out.config = {{"command", "noth-check"}, {"side", side_s}, {"family", family_s},
                  {"points", points}, {"seed", seed}, {"tol", tol}};
    out.csv.header = {"x", "residual", "scale", "relative"};
    SampleRng rng(seed);
    double worst = 0.0;
    for (int i = 0; i < points; ++i) {
        double x = rng.next_in(0.5, 2.0);
        Jet1 H = family_hjet(fam, x, 6);
        double r = (side == Side::direct) ? noth_residual(H) : dual_sixth_residual(H);
        double s = (side == Side::direct) ? noth_residual_scale(H) : dual_sixth_residual_scale(H);
        double rel = (s > 0.0) ? std::abs(r) / s : std::abs(r);
        worst = std::max(worst, rel);
        out.csv.rows.push_back({fmt(x), fmt(r), fmt(s), fmt(rel)});
    }
    ResultRow row;
    row.name = side_s + " " + family_s;
    row.residuals = {{"relative_residual", worst}};
    row.pass = worst < tol;
    out.results.push_back(row);
    return out;
}

Output run_weyl(const std::string& side_s, const std::string& family_s, int points,
                std::uint64_t seed, double tol) {
    Side side = parse_side(side_s);
    FunctionSpec fam = parse_function_spec(family_s);
    Output out;
    out.config = {{"command", "weyl"}, {"side", side_s}, {"family", family_s},
                  {"points", points}, {"seed", seed}, {"tol", tol}};
    out.csv.header = {"x", "y", "z", "p", "q", "weyl_norm", "ricci_norm"};
    NurowskiMetricFn fn{side, fam};
    double wmax = 0.0;
    for (const auto& pt : sample_points(points, seed)) {
        auto rep = curvature_at(fn, pt);
        wmax = std::max(wmax, rep.weyl_norm);
        out.csv.rows.push_back({fmt(pt.x), fmt(pt.y), fmt(pt.z), fmt(pt.p), fmt(pt.q),
                                fmt(rep.weyl_norm), fmt(rep.ricci_norm)});
    }
    ResultRow row;
    row.name = side_s + " " + family_s;
    row.residuals = {{"weyl_norm", wmax}};
    row.pass = wmax < tol;
    out.results.push_back(row);
    return out;
}

Output run_ricci(const std::string& side_s, const std::string& family_s,
                 const std::string& omega_s, int points, std::uint64_t seed, double tol) {
    Side side = parse_side(side_s);
    FunctionSpec fam = parse_function_spec(family_s);
    FunctionSpec om = parse_function_spec(omega_s);
    Output out;
    out.config = {{"command", "ricci"}, {"side", side_s}, {"family", family_s},
                  {"omega", omega_s}, {"points", points}, {"seed", seed}, {"tol", tol}};
    out.csv.header = {"x", "y", "z", "p", "q", "ricci_norm"};
    ConformalMetricFn<GtildeMetricFn> fn{GtildeMetricFn{side, fam}, om};
    double rmax = 0.0;
    for (const auto& pt : sample_points(points, seed)) {
        auto rep = curvature_at(fn, pt);
        rmax = std::max(rmax, rep.ricci_norm);
        out.csv.rows.push_back(
            {fmt(pt.x), fmt(pt.y), fmt(pt.z), fmt(pt.p), fmt(pt.q), fmt(rep.ricci_norm)});
    }
    ResultRow row;
    row.name = side_s + " " + family_s + " omega=" + omega_s;
    row.residuals = {{"ricci_norm", rmax}};
    row.pass = rmax < tol;
    out.results.push_back(row);
    return out;
}

ResultRow theorem_row(const ParamCase& pc, const TheoremOptions& opt, CsvTable* csv) {
    WTrajectory traj;
    double x1 = opt.x1;
    for (int attempt = 0;; ++attempt) {
        try {
            traj = integrate_w(pc.abg.to_abg(), opt.w0, opt.x0, x1, opt.steps);
            break;
        } catch (const std::runtime_error&) {
            if (attempt >= opt.max_window_shrinks) throw;
            x1 = opt.x0 + 0.5 * (x1 - opt.x0);
        }
    }
    auto v = solve_v(traj, 1.0);
    auto u = solve_u(traj, pc.abg_tilde.to_abg(), 1.0, 0.0);
    double k = static_cast<double>(pc.k);
    double max_chazy = 0.0, max_scale = 0.0, control = 0.0;
    Side other = (pc.side == Side::direct) ? Side::dual : Side::direct;
    for (std::size_t n = 0; n < traj.size(); ++n) {
        Jet1 P = combination_P(pc.combination, traj.jets[n]);
        Jet1 Q = q_from_p(P);
        Jet1 f = truncate(u[n], 2) / truncate(v[n], 2);
        double rc = std::abs(chazy_residual(k, P));
        double rs = std::abs(scale_ode_residual(pc.side, f, Q));
        double rx = std::abs(scale_ode_residual(other, f, Q));
        max_chazy = std::max(max_chazy, rc);
        max_scale = std::max(max_scale, rs);
        control = std::max(control, rx);
        if (csv)
            csv->rows.push_back({fmt(traj.grid[n]), fmt(rc), fmt(rs), fmt(rx)});
    }
    ResultRow row;
    std::string side_s = (pc.side == Side::direct) ? "direct" : "dual";
    row.name = side_s + " k=" + rational_str(pc.k) + " weights=(" +
               std::to_string(pc.combination.weights[0]) + "," +
               std::to_string(pc.combination.weights[1]) + "," +
               std::to_string(pc.combination.weights[2]) + ") abg=(" +
               rational_str(pc.abg.alpha) + "," + rational_str(pc.abg.beta) + "," +
               rational_str(pc.abg.gamma) + ")";
    row.residuals = {{"chazy", max_chazy}, {"scale_ode", max_scale}, {"control", control}};
    row.pass = max_scale < opt.tolerance && max_chazy < opt.tolerance && control > 1e-2;
    row.extra = {{"x0", opt.x0}, {"x1", x1}, {"steps", opt.steps}};
    return row;
}

Output run_theorem(const std::string& side_s, int case_index, const TheoremOptions& opt) {
    Output out;
    out.config = {{"command", "theorem"}, {"side", side_s}, {"case", case_index},
                  {"x0", opt.x0}, {"x1", opt.x1}, {"steps", opt.steps},
                  {"tol", opt.tolerance}};
    out.csv.header = {"x", "chazy_residual", "scale_residual", "control_residual"};
    const auto& cases = golden_cases();
    bool any = false;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto& pc = cases[i];
        std::string pc_side = (pc.side == Side::direct) ? "direct" : "dual";
        if (!side_s.empty() && pc_side != side_s) continue;
        if (case_index >= 0 && static_cast<std::size_t>(case_index) != i) continue;
        out.results.push_back(theorem_row(pc, opt, &out.csv));
        any = true;
    }
    if (!any) throw DomainError("no matching theorem case");
    return out;
}

Output run_suite(std::uint64_t seed) {
    Output out;
    out.config = {{"command", "suite"}, {"seed", seed}};
    out.csv.header = {"case", "pass"};

    {
        ResultRow row;
        row.name = "pell tables";
        bool ok = true;
        auto direct = pell_enumerate(PellFamily::direct, 13);
        auto dual = pell_enumerate(PellFamily::dual, 13);
        ok = ok && direct[3].big == 12238 && direct[3].small == 5473;
        ok = ok && dual[3].big == 168717 && dual[3].small == 53353;
        for (int n = 0; n <= 12; ++n)
            ok = ok && pell_identity_holds(PellFamily::direct, direct[n]) &&
                 pell_identity_holds(PellFamily::dual, dual[n]);
        row.residuals = {{"identity_defect", ok ? 0.0 : 1.0}};
        row.pass = ok;
        out.results.push_back(row);
    }
    {
        ResultRow row;
        row.name = "parameter maps";
        bool ok = true;
        for (const auto& pc : golden_cases()) {
            auto tt = tilde_triple(pc.side, pc.k, pc.combination, pc.abg);
            auto kt = chazy_pair(pc.side, pc.k);
            ok = ok && tt.exact && tt.value == pc.abg_tilde && kt.exact &&
                 kt.value == pc.k_tilde;
        }
        row.residuals = {{"exact_mismatch", ok ? 0.0 : 1.0}};
        row.pass = ok;
        out.results.push_back(row);
    }
    {
        double worst = 0.0;
        for (double a : {-1.5, -2.5, -4.0}) {
            Jet1 H = family_hjet(PowerLawSpec{a, 1.0, 0.0}, 1.2, 6);
            worst = std::max(worst, std::abs(noth_residual(H)) / noth_residual_scale(H));
        }
        for (double b : {-3.0, -4.0 / 3.0, -5.0 / 3.0}) {
            Jet1 F = family_hjet(PowerLawSpec{b, 1.0, 0.0}, 1.2, 6);
            worst = std::max(worst,
                             std::abs(dual_sixth_residual(F)) / dual_sixth_residual_scale(F));
        }
        ResultRow row;
        row.name = "sixth-order solutions";
        row.residuals = {{"relative_residual", worst}};
        row.pass = worst < 1e-9;
        out.results.push_back(row);
    }
    {
        auto pts = sample_points(10, seed);
        auto a = verify_weyl(Side::direct, ConstantSpec{1.0}, pts);
        auto b = verify_weyl(Side::direct, PowerLawSpec{-1.5, 1.0, 0.0}, pts);
        auto c = verify_weyl(Side::direct, PolynomialSpec{{0.0, 6.0}}, pts);
        ResultRow row;
        row.name = "conformal flatness";
        row.residuals = {{"flat_weyl_norm", std::max(a.max_weyl_norm, b.max_weyl_norm)},
                         {"control_weyl_norm", c.max_weyl_norm}};
        row.pass = a.pass && b.pass && !c.pass && c.max_weyl_norm > 1e-3;
        out.results.push_back(row);
    }
    {
        auto pts = sample_points(10, seed + 1);
        FunctionSpec fam = PowerLawSpec{-1.5, 1.0, 0.0};
        FunctionSpec dfam = PowerLawSpec{-4.0 / 3.0, 1.0, 0.0};
        auto a = verify_ricci_flat(Side::direct, fam, ConstantSpec{1.0}, pts);
        auto b = verify_ricci_flat(Side::direct, fam, PowerLawSpec{0.5, 1.0, 0.0}, pts);
        auto c = verify_ricci_flat(Side::dual, dfam, PowerLawSpec{-2.0 / 3.0, 1.0, 0.0}, pts);
        auto d = verify_ricci_flat(Side::direct, fam, PowerLawSpec{2.0, 1.0, 0.0}, pts);
        ResultRow row;
        row.name = "ricci-flat representatives";
        row.residuals = {
            {"flat_ricci_norm",
             std::max({a.max_ricci_norm, b.max_ricci_norm, c.max_ricci_norm})},
            {"control_ricci_norm", d.max_ricci_norm}};
        row.pass = a.pass && b.pass && c.pass && !d.pass && d.max_ricci_norm > 1e-3;
        out.results.push_back(row);
    }
    {
        TheoremOptions opt;
        const auto& cases = golden_cases();
        for (std::size_t idx : {0u, 2u, 5u, 7u}) out.results.push_back(theorem_row(cases[idx], opt, nullptr));
    }
    for (const auto& r : out.results)
        out.csv.rows.push_back({r.name, r.pass ? "1" : "0"});
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification tool for maximally symmetric (2,3,5)-distributions"};
    app.require_subcommand(1);

    std::string format = "text", output_path, side, family, omega, k_text = "3/2";
    int count = 4, points = 10, case_index = -1, jobs = 0;
    std::uint64_t seed = 1;
    double tol_weyl = 1e-7, tol_ricci = 1e-7, tol_noth = 1e-9;
    TheoremOptions topt;

    app.add_option("--format", format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--output", output_path, "write the report to this path");
    app.add_option("--jobs", jobs, "worker count (output is identical for any value)");

    auto* pell = app.add_subcommand("pell", "enumerate negative Pell solutions");
    pell->add_option("--family", side, "direct or dual")->required();
    pell->add_option("--count", count, "number of pairs");

    auto* cp = app.add_subcommand("chazy-pair", "map k to the paired parameter");
    cp->add_option("--side", side, "direct or dual")->required();
    cp->add_option("--k", k_text, "rational parameter, e.g. 3/2");

    auto* pm = app.add_subcommand("param-map", "tabulated parameter-triple maps");
    pm->add_option("--side", side, "direct or dual (default both)");
    pm->add_option("--case", case_index, "restrict to one golden case index");

    auto* nc = app.add_subcommand("noth-check", "6th-order equation residuals");
    nc->add_option("--side", side, "direct or dual")->required();
    nc->add_option("--family", family, "function spec for H'' or F''")->required();
    nc->add_option("--points", points, "sample count");
    nc->add_option("--seed", seed, "sample seed");
    nc->add_option("--tol", tol_noth, "relative tolerance");

    auto* wy = app.add_subcommand("weyl", "Weyl norm of the Nurowski metric");
    wy->add_option("--side", side, "direct or dual")->required();
    wy->add_option("--family", family, "function spec for H'' or F''")->required();
    wy->add_option("--points", points, "sample count");
    wy->add_option("--seed", seed, "sample seed");
    wy->add_option("--tol", tol_weyl, "norm tolerance");

    auto* rc = app.add_subcommand("ricci", "Ricci norm of the rescaled metric");
    rc->add_option("--side", side, "direct or dual")->required();
    rc->add_option("--family", family, "function spec for H'' or F''")->required();
    rc->add_option("--omega", omega, "conformal factor spec")->required();
    rc->add_option("--points", points, "sample count");
    rc->add_option("--seed", seed, "sample seed");
    rc->add_option("--tol", tol_ricci, "norm tolerance");

    auto* th = app.add_subcommand("theorem", "scale-equation pipelines");
    th->add_option("--side", side, "direct or dual (default both)");
    th->add_option("--case", case_index, "restrict to one golden case index");
    th->add_option("--x0", topt.x0, "window start");
    th->add_option("--x1", topt.x1, "window end");
    th->add_option("--steps", topt.steps, "integration steps");
    th->add_option("--tol", topt.tolerance, "residual tolerance");

    auto* su = app.add_subcommand("suite", "full verification battery");
    su->add_option("--seed", seed, "sample seed");

    for (auto* sc : {pell, cp, pm, nc, wy, rc, th, su}) sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (topt.x0 >= topt.x1) throw DomainError("window needs x0 < x1");
        if (topt.steps < 10) throw DomainError("steps must be at least 10");
        Output out;
        if (pell->parsed()) out = run_pell(side, count);
        else if (cp->parsed()) out = run_chazy_pair(side, k_text);
        else if (pm->parsed()) out = run_param_map(side, case_index);
        else if (nc->parsed()) out = run_noth_check(side, family, points, seed, tol_noth);
        else if (wy->parsed()) out = run_weyl(side, family, points, seed, tol_weyl);
        else if (rc->parsed()) out = run_ricci(side, family, omega, points, seed, tol_ricci);
        else if (th->parsed()) out = run_theorem(side, case_index, topt);
        else out = run_suite(seed);
        out.config["jobs"] = jobs;
        out.config["format"] = format;
        return emit(out, format, output_path);
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
