#include "nurowski/chazy.hpp"

#include <algorithm>
#include <cmath>

#include "nurowski/errors.hpp"

namespace nurowski {

namespace {
constexpr double kBlowupGuard = 1e8;
}

Combination::Combination(std::array<int, 3> w) : weights(w) {
    std::array<int, 3> s = w;
    std::sort(s.begin(), s.end());
    bool ok = (s == std::array<int, 3>{2, 2, 2}) || (s == std::array<int, 3>{1, 2, 3}) ||
              (s == std::array<int, 3>{1, 1, 4});
    if (!ok) throw DomainError("combination weights must be a permutation of 222, 123 or 114");
}

double tau_squared(const WState& w, const AbgTriple& abg) {
    double d12 = w.w1 - w.w2, d23 = w.w2 - w.w3, d31 = w.w3 - w.w1;
    return abg.alpha * abg.alpha * d12 * d31 + abg.beta * abg.beta * d23 * d12 +
           abg.gamma * abg.gamma * d31 * d23;
}

WState w_rhs(const WState& w, const AbgTriple& abg) {
    double t2 = tau_squared(w, abg);
    return {w.w2 * w.w3 - w.w1 * (w.w2 + w.w3) + t2,
            w.w3 * w.w1 - w.w2 * (w.w3 + w.w1) + t2,
            w.w1 * w.w2 - w.w3 * (w.w1 + w.w2) + t2};
}

namespace {

std::array<Jet1, 3> rhs_jets(const std::array<Jet1, 3>& w, const AbgTriple& abg) {
    const Jet1 d12 = w[0] - w[1], d23 = w[1] - w[2], d31 = w[2] - w[0];
    Jet1 t2 = abg.alpha * abg.alpha * (d12 * d31) + abg.beta * abg.beta * (d23 * d12) +
              abg.gamma * abg.gamma * (d31 * d23);
    return {w[1] * w[2] - w[0] * (w[1] + w[2]) + t2,
            w[2] * w[0] - w[1] * (w[2] + w[0]) + t2,
            w[0] * w[1] - w[2] * (w[0] + w[1]) + t2};
}

}  // namespace

std::array<Jet1, 3> w_node_jets(const WState& w, const AbgTriple& abg, double x, int order) {
    std::array<Jet1, 3> jets{Jet1(x, order), Jet1(x, order), Jet1(x, order)};
    jets[0][0] = w.w1;
    jets[1][0] = w.w2;
    jets[2][0] = w.w3;
    for (int m = 0; m + 1 <= order; ++m) {
        std::array<Jet1, 3> cur{truncate(jets[0], m), truncate(jets[1], m), truncate(jets[2], m)};
        auto f = rhs_jets(cur, abg);
        for (int i = 0; i < 3; ++i) jets[static_cast<std::size_t>(i)][m + 1] = f[static_cast<std::size_t>(i)][m];
    }
    return jets;
}

WTrajectory integrate_w(const AbgTriple& abg, const WState& w0, double x0, double x1, int steps) {
    if (steps < 1) throw DomainError("integrate_w needs steps >= 1");
    const bool started_nondegenerate = nondegenerate(w0);
    const double h = (x1 - x0) / steps;

    auto add = [](const WState& a, const WState& b, double c) {
        return WState{a.w1 + c * b.w1, a.w2 + c * b.w2, a.w3 + c * b.w3};
    };
    auto check = [&](const WState& w, double x) {
        if (!std::isfinite(w.w1) || !std::isfinite(w.w2) || !std::isfinite(w.w3) ||
            std::max({std::abs(w.w1), std::abs(w.w2), std::abs(w.w3)}) > kBlowupGuard)
            throw SingularityError("w-trajectory blow-up", x);
        if (started_nondegenerate && !nondegenerate(w))
            throw DegeneracyError("w-trajectory degeneracy collapse", x);
    };

    WTrajectory traj;
    traj.abg = abg;
    traj.grid.reserve(static_cast<std::size_t>(steps) + 1);
    traj.states.reserve(static_cast<std::size_t>(steps) + 1);
    traj.jets.reserve(static_cast<std::size_t>(steps) + 1);

    WState w = w0;
    double x = x0;
    check(w, x);
    traj.grid.push_back(x);
    traj.states.push_back(w);
    traj.jets.push_back(w_node_jets(w, abg, x));
    for (int n = 0; n < steps; ++n) {
        WState k1 = w_rhs(w, abg);
        WState k2 = w_rhs(add(w, k1, h / 2.0), abg);
        WState k3 = w_rhs(add(w, k2, h / 2.0), abg);
        WState k4 = w_rhs(add(w, k3, h), abg);
        w = WState{w.w1 + h / 6.0 * (k1.w1 + 2.0 * k2.w1 + 2.0 * k3.w1 + k4.w1),
                   w.w2 + h / 6.0 * (k1.w2 + 2.0 * k2.w2 + 2.0 * k3.w2 + k4.w2),
                   w.w3 + h / 6.0 * (k1.w3 + 2.0 * k2.w3 + 2.0 * k3.w3 + k4.w3)};
        x = x0 + (n + 1) * h;
        check(w, x);
        traj.grid.push_back(x);
        traj.states.push_back(w);
        traj.jets.push_back(w_node_jets(w, abg, x));
    }
    return traj;
}

double chazy_residual(double k, const Jet1& y) {
    if (y.order() < 3) throw DomainError("chazy residual needs a jet of order >= 3");
    double base = y[3] - 2.0 * y[0] * y[2] + 3.0 * y[1] * y[1];
    if (std::isinf(k)) return base;  // Chazy's original equation
    double denom = 36.0 - k * k;
    if (std::abs(denom) < 1e-12) throw DomainError("invalid Chazy parameter k = +-6");
    double t = 6.0 * y[1] - y[0] * y[0];
    return base - 4.0 / denom * t * t;
}

double combination_P(const Combination& c, const WState& w) {
    return -(c.weights[0] * w.w1 + c.weights[1] * w.w2 + c.weights[2] * w.w3);
}

Jet1 combination_P(const Combination& c, const std::array<Jet1, 3>& w) {
    return -(static_cast<double>(c.weights[0]) * w[0] + static_cast<double>(c.weights[1]) * w[1] +
             static_cast<double>(c.weights[2]) * w[2]);
}

double recover_s(const WState& w) {
    double denom = w.w2 - w.w3;
    if (std::abs(denom) <= kDegeneracyEps)
        throw DegeneracyError("recover_s: w2 - w3 degenerate", 0.0);
    return (w.w1 - w.w3) / denom;
}

Jet1 recover_s(const std::array<Jet1, 3>& w) {
    Jet1 denom = w[1] - w[2];
    if (std::abs(denom.value()) <= kDegeneracyEps)
        throw DegeneracyError("recover_s: w2 - w3 degenerate", w[0].x0());
    return (w[0] - w[2]) / denom;
}

double potential_V(double s, const AbgTriple& abg) {
    if (std::abs(s) <= kDegeneracyEps || std::abs(s - 1.0) <= kDegeneracyEps)
        throw DomainError("potential V has a pole at s in {0,1}");
    double a2 = abg.alpha * abg.alpha, b2 = abg.beta * abg.beta, g2 = abg.gamma * abg.gamma;
    return (1.0 - b2) / (s * s) + (1.0 - g2) / ((s - 1.0) * (s - 1.0)) +
           (b2 + g2 - a2 - 1.0) / (s * (s - 1.0));
}

double schwarzian_residual(const Jet1& s, const AbgTriple& abg) {
    if (s.order() < 3) throw DomainError("schwarzian residual needs a jet of order >= 3");
    Jet1 sp = derivative(s);
    if (sp.value() == 0.0)
        throw DegeneracyError("schwarzian residual: s' = 0", s.x0());
    Jet1 ratio = derivative(sp) / truncate(sp, sp.order() - 1);  // s''/s'
    double schw = ratio[1] - 0.5 * ratio[0] * ratio[0];
    return schw + 0.5 * sp.value() * sp.value() * potential_V(s.value(), abg);
}

std::array<double, 3> hypergeometric_params(const AbgTriple& abg) {
    return {0.5 * (1.0 - abg.alpha - abg.beta - abg.gamma),
            0.5 * (1.0 + abg.alpha - abg.beta - abg.gamma), 1.0 - abg.beta};
}

}  // namespace nurowski
