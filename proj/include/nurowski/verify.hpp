#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nurowski/cases.hpp"
#include "nurowski/chazy.hpp"
#include "nurowski/curvature.hpp"
#include "nurowski/function_spec.hpp"
#include "nurowski/geometry.hpp"

namespace nurowski {

struct VerificationReport {
    std::string description;
    double x0 = 0.0, x1 = 0.0;
    int steps = 0;
    bool window_shrunk = false;  // runner backed off a degenerate window
    double max_chazy_residual = 0.0;
    double max_scale_residual = 0.0;      // correct-side operator
    double control_scale_residual = 0.0;  // wrong-side operator (negative control)
    double max_ricci_norm = 0.0;
    double max_weyl_norm = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

// v(x) = v0 exp(int (w1-w2-w3) dx) stepped by the node Taylor jets; each
// returned jet satisfies v' = v (w1-w2-w3) termwise at its node.
std::vector<Jet1> solve_v(const WTrajectory& traj, double v0);

// Second-order linear equation for u with coefficients built from the w's and
// the tilde parameters.
std::vector<Jet1> solve_u(const WTrajectory& traj, const AbgTriple& abg_tilde, double u0,
                          double u0p);

// Q = P^2 - 6P' per node from the combination jets.
std::vector<Jet1> q_along(const WTrajectory& traj, const Combination& comb);

struct TheoremOptions {
    WState w0{1.0, 0.0, -1.0};
    double x0 = 0.02, x1 = 0.3;
    int steps = 2000;
    double tolerance = 1e-6;
    int max_window_shrinks = 4;
};

// Theorem pipeline: integrate the w-system, check P solves the k-Chazy
// equation, build f = u/v and report the max scale-ODE residual together with
// the wrong-side negative control.
VerificationReport verify_theorem(const ParamCase& pc, const TheoremOptions& opt = {});

// Seeded linear congruential generator (cross-language reproducible).
class SampleRng {
public:
    explicit SampleRng(std::uint64_t seed) : state_(seed) {}
    double next_unit() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<double>(state_ >> 11) * 0x1.0p-53;
    }
    double next_in(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

private:
    std::uint64_t state_;
};

struct SampleBox {
    double x_lo = 0.5, x_hi = 2.0;
    double other_lo = -1.0, other_hi = 1.0;
};

std::vector<Point5> sample_points(int count, std::uint64_t seed, const SampleBox& box = {});

// Max Ricci norm of Omega^2 gtilde over the sample points.
VerificationReport verify_ricci_flat(Side side, const FunctionSpec& family,
                                     const FunctionSpec& omega,
                                     const std::vector<Point5>& points, double tolerance = 1e-7);

// Max Weyl norm of the assembled Nurowski g over the sample points.
VerificationReport verify_weyl(Side side, const FunctionSpec& family,
                               const std::vector<Point5>& points, double tolerance = 1e-7);

}  // namespace nurowski
