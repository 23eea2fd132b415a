#include "nurowski/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nurowski/errors.hpp"

namespace nurowski {

namespace {

Jet1 minus_sum_jet(const std::array<Jet1, 3>& w) {
    // w1 - w2 - w3
    return w[0] - w[1] - w[2];
}

}  // namespace

std::vector<Jet1> solve_v(const WTrajectory& traj, double v0) {
    if (v0 == 0.0) throw DomainError("solve_v needs v0 != 0");
    std::vector<Jet1> out;
    out.reserve(traj.size());
    double v = v0;
    for (std::size_t n = 0; n < traj.size(); ++n) {
        Jet1 A = minus_sum_jet(traj.jets[n]);  // order 4
        const int ord = std::min(A.order() + 1, kMaxJetOrder);
        Jet1 vj(traj.grid[n], ord);
        vj[0] = v;
        for (int m = 0; m + 1 <= ord; ++m) {
            double acc = 0.0;
            for (int i = 0; i <= m; ++i) acc += detail::binom(m, i) * A[i] * vj[m - i];
            vj[m + 1] = acc;
        }
        out.push_back(vj);
        if (n + 1 < traj.size()) v = vj.eval(traj.grid[n + 1] - traj.grid[n]);
    }
    return out;
}

std::vector<Jet1> solve_u(const WTrajectory& traj, const AbgTriple& abg_tilde, double u0,
                          double u0p) {
    const double a2 = abg_tilde.alpha * abg_tilde.alpha;
    const double b2 = abg_tilde.beta * abg_tilde.beta;
    const double g2 = abg_tilde.gamma * abg_tilde.gamma;
    std::vector<Jet1> out;
    out.reserve(traj.size());
    double u = u0, up = u0p;
    for (std::size_t n = 0; n < traj.size(); ++n) {
        const auto& w = traj.jets[n];
        Jet1 A = minus_sum_jet(w);
        Jet1 E = (a2 - 1.0) * (w[0] * w[0]) + (b2 - 1.0) * (w[1] * w[1]) +
                 (g2 - 1.0) * (w[2] * w[2]);
        Jet1 Fx = (a2 + b2 - g2 - 1.0) * (w[0] * w[1]) + (a2 - b2 + g2 - 1.0) * (w[0] * w[2]) -
                  (a2 - b2 - g2 + 1.0) * (w[1] * w[2]);
        Jet1 B = E - Fx;  // u'' = 2A u' + B u
        const int ord = std::min(A.order() + 2, kMaxJetOrder);
        Jet1 uj(traj.grid[n], ord);
        uj[0] = u;
        uj[1] = up;
        for (int m = 0; m + 2 <= ord; ++m) {
            double acc = 0.0;
            for (int i = 0; i <= m; ++i)
                acc += detail::binom(m, i) * (2.0 * A[i] * uj[m - i + 1] + B[i] * uj[m - i]);
            uj[m + 2] = acc;
        }
        out.push_back(uj);
        if (n + 1 < traj.size()) {
            double h = traj.grid[n + 1] - traj.grid[n];
            u = uj.eval(h);
            up = derivative(uj).eval(h);
        }
    }
    return out;
}

std::vector<Jet1> q_along(const WTrajectory& traj, const Combination& comb) {
    std::vector<Jet1> out;
    out.reserve(traj.size());
    for (std::size_t n = 0; n < traj.size(); ++n)
        out.push_back(q_from_p(combination_P(comb, traj.jets[n])));
    return out;
}

VerificationReport verify_theorem(const ParamCase& pc, const TheoremOptions& opt) {
    VerificationReport rep;
    {
        std::ostringstream os;
        os << (pc.side == Side::direct ? "theorem-direct" : "theorem-dual") << " k="
           << pc.k << " weights=(" << pc.combination.weights[0] << ","
           << pc.combination.weights[1] << "," << pc.combination.weights[2] << ")";
        rep.description = os.str();
    }
    rep.steps = opt.steps;
    rep.tolerance = opt.tolerance;

    double x0 = opt.x0, x1 = opt.x1;
    WTrajectory traj;
    for (int attempt = 0;; ++attempt) {
        try {
            traj = integrate_w(pc.abg.to_abg(), opt.w0, x0, x1, opt.steps);
            break;
        } catch (const std::runtime_error&) {
            if (attempt >= opt.max_window_shrinks) throw;
            x1 = x0 + 0.5 * (x1 - x0);
            rep.window_shrunk = true;
        }
    }
    rep.x0 = x0;
    rep.x1 = x1;

    const double k = static_cast<double>(pc.k);
    auto v = solve_v(traj, 1.0);
    auto u = solve_u(traj, pc.abg_tilde.to_abg(), 1.0, 0.0);
    for (std::size_t n = 0; n < traj.size(); ++n) {
        Jet1 P = combination_P(pc.combination, traj.jets[n]);
        rep.max_chazy_residual = std::max(rep.max_chazy_residual, std::abs(chazy_residual(k, P)));
        Jet1 Q = q_from_p(P);
        Jet1 f = truncate(u[n], 2) / truncate(v[n], 2);
        rep.max_scale_residual =
            std::max(rep.max_scale_residual, std::abs(scale_ode_residual(pc.side, f, Q)));
        Side other = (pc.side == Side::direct) ? Side::dual : Side::direct;
        rep.control_scale_residual =
            std::max(rep.control_scale_residual, std::abs(scale_ode_residual(other, f, Q)));
    }
    rep.pass = rep.max_scale_residual < opt.tolerance &&
               rep.max_chazy_residual < opt.tolerance &&
               rep.control_scale_residual > 1e-2;
    return rep;
}

std::vector<Point5> sample_points(int count, std::uint64_t seed, const SampleBox& box) {
    SampleRng rng(seed);
    std::vector<Point5> pts;
    pts.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        Point5 p;
        p.x = rng.next_in(box.x_lo, box.x_hi);
        p.y = rng.next_in(box.other_lo, box.other_hi);
        p.z = rng.next_in(box.other_lo, box.other_hi);
        p.p = rng.next_in(box.other_lo, box.other_hi);
        p.q = rng.next_in(box.other_lo, box.other_hi);
        pts.push_back(p);
    }
    return pts;
}

VerificationReport verify_ricci_flat(Side side, const FunctionSpec& family,
                                     const FunctionSpec& omega,
                                     const std::vector<Point5>& points, double tolerance) {
    VerificationReport rep;
    rep.description = std::string(side == Side::direct ? "ricci-direct " : "ricci-dual ") +
                      format_function_spec(family) + " omega=" + format_function_spec(omega);
    rep.tolerance = tolerance;
    ConformalMetricFn<GtildeMetricFn> fn{GtildeMetricFn{side, family}, omega};
    for (const auto& pt : points) {
        auto rep_c = curvature_at(fn, pt);
        rep.max_ricci_norm = std::max(rep.max_ricci_norm, rep_c.ricci_norm);
        rep.max_weyl_norm = std::max(rep.max_weyl_norm, rep_c.weyl_norm);
    }
    rep.pass = rep.max_ricci_norm < tolerance;
    return rep;
}

VerificationReport verify_weyl(Side side, const FunctionSpec& family,
                               const std::vector<Point5>& points, double tolerance) {
    VerificationReport rep;
    rep.description = std::string(side == Side::direct ? "weyl-direct " : "weyl-dual ") +
                      format_function_spec(family);
    rep.tolerance = tolerance;
    NurowskiMetricFn fn{side, family};
    for (const auto& pt : points) {
        auto rep_c = curvature_at(fn, pt);
        rep.max_weyl_norm = std::max(rep.max_weyl_norm, rep_c.weyl_norm);
        rep.max_ricci_norm = std::max(rep.max_ricci_norm, rep_c.ricci_norm);
    }
    rep.pass = rep.max_weyl_norm < tolerance;
    return rep;
}

}  // namespace nurowski
