#pragma once

#include <array>
#include <vector>

#include "nurowski/jet.hpp"

namespace nurowski {

// Angle parameters (alpha, beta, gamma) of the Schwarzian potential.
struct AbgTriple {
    double alpha = 0.0, beta = 0.0, gamma = 0.0;
};

struct WState {
    double w1 = 0.0, w2 = 0.0, w3 = 0.0;
};

// Pairwise-difference threshold below which s and V lose significance.
inline constexpr double kDegeneracyEps = 1e-9;

inline bool nondegenerate(const WState& w, double eps = kDegeneracyEps) {
    return std::abs(w.w1 - w.w2) > eps && std::abs(w.w2 - w.w3) > eps &&
           std::abs(w.w3 - w.w1) > eps;
}

// Weighted sum -c1 w1 - c2 w2 - c3 w3; the weight multiset is one of
// {2,2,2}, {1,2,3}, {1,1,4}.
struct Combination {
    std::array<int, 3> weights{2, 2, 2};
    Combination() = default;
    explicit Combination(std::array<int, 3> w);
};

struct WTrajectory {
    std::vector<double> grid;
    std::vector<WState> states;
    std::vector<std::array<Jet1, 3>> jets;  // order-4 node jets of (w1,w2,w3)
    AbgTriple abg;
    std::size_t size() const { return grid.size(); }
};

double tau_squared(const WState& w, const AbgTriple& abg);
WState w_rhs(const WState& w, const AbgTriple& abg);

// Order-`order` jets of (w1,w2,w3) at a point, by Taylor recurrence on the
// right-hand side.
std::array<Jet1, 3> w_node_jets(const WState& w, const AbgTriple& abg, double x, int order = 4);

// Classical fixed-step RK4 with per-node jets; throws SingularityError on
// blow-up and DegeneracyError when two w_i collide.
WTrajectory integrate_w(const AbgTriple& abg, const WState& w0, double x0, double x1, int steps);

// Generalised Chazy residual y''' - 2yy'' + 3y'^2 - 4/(36-k^2) (6y'-y^2)^2;
// pass k = infinity for Chazy's original equation.
double chazy_residual(double k, const Jet1& y);

double combination_P(const Combination& c, const WState& w);
Jet1 combination_P(const Combination& c, const std::array<Jet1, 3>& w);

double recover_s(const WState& w);
Jet1 recover_s(const std::array<Jet1, 3>& w);

double potential_V(double s, const AbgTriple& abg);
// {s,x} + (1/2)(s')^2 V(s)
double schwarzian_residual(const Jet1& s, const AbgTriple& abg);

// (a, b, c) of the hypergeometric reduction.
std::array<double, 3> hypergeometric_params(const AbgTriple& abg);

}  // namespace nurowski
