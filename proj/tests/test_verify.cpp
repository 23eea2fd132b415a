#include <doctest.h>

#include <cmath>

#include "nurowski/verify.hpp"

using namespace nurowski;

namespace {

const AbgTriple kSym{4.0 / 3.0, 4.0 / 3.0, 4.0 / 3.0};

WTrajectory sym_trajectory(int steps = 500) {
    return integrate_w(kSym, {1.0, 0.0, -1.0}, 0.02, 0.3, steps);
}

}  // namespace

TEST_CASE("solve_v on the zero trajectory is constant") {
    WTrajectory traj = integrate_w(AbgTriple{1.0, 1.0, 1.0}, {0.0, 0.0, 0.0}, 0.0, 1.0, 20);
    auto v = solve_v(traj, 2.5);
    for (const auto& j : v) {
        CHECK(j[0] == doctest::Approx(2.5));
        CHECK(j[1] == doctest::Approx(0.0));
    }
    CHECK_THROWS_AS(solve_v(traj, 0.0), DomainError);
}

TEST_CASE("solve_v satisfies its equation at every node") {
    WTrajectory traj = sym_trajectory();
    auto v = solve_v(traj, 1.0);
    for (std::size_t n = 0; n < traj.size(); ++n) {
        const auto& w = traj.states[n];
        double A = w.w1 - w.w2 - w.w3;
        double resid = v[n][1] - v[n][0] * A;
        CHECK(std::abs(resid) < 1e-10 * std::max(1.0, std::abs(v[n][0])));
    }
}

TEST_CASE("wronskian combination is constant along the flow") {
    WTrajectory traj = sym_trajectory();
    auto v = solve_v(traj, 1.0);
    double ref = 0.0;
    for (std::size_t n = 0; n < traj.size(); ++n) {
        const auto& w = traj.states[n];
        double s = recover_s(w);
        double val = v[n][0] * v[n][0] / ((w.w1 - w.w2) * s);
        if (n == 0) ref = val;
        CHECK(val == doctest::Approx(ref).epsilon(1e-7));
    }
}

TEST_CASE("solve_u with unit parameters on the zero trajectory is linear") {
    WTrajectory traj = integrate_w(AbgTriple{1.0, 1.0, 1.0}, {0.0, 0.0, 0.0}, 0.0, 1.0, 20);
    auto u = solve_u(traj, AbgTriple{1.0, 1.0, 1.0}, 1.0, 3.0);
    for (std::size_t n = 0; n < traj.size(); ++n) {
        CHECK(u[n][0] == doctest::Approx(1.0 + 3.0 * traj.grid[n]));
        CHECK(u[n][1] == doctest::Approx(3.0));
        CHECK(std::abs(u[n][2]) < 1e-12);
    }
}

TEST_CASE("v solves the u-equation with the untilded parameters") {
    WTrajectory traj = sym_trajectory();
    auto v = solve_v(traj, 1.0);
    auto u = solve_u(traj, kSym, 1.0, v[0][1]);
    for (std::size_t n = 0; n < traj.size(); ++n) {
        double scale = std::max(1.0, std::abs(v[n][0]));
        CHECK(std::abs(u[n][0] - v[n][0]) / scale < 1e-8);
        // v's own jets satisfy the second-order form as well
        const auto& w = traj.jets[n];
        Jet1 A = w[0] - w[1] - w[2];
        double a2 = kSym.alpha * kSym.alpha, b2 = kSym.beta * kSym.beta,
               g2 = kSym.gamma * kSym.gamma;
        Jet1 E = (a2 - 1.0) * (w[0] * w[0]) + (b2 - 1.0) * (w[1] * w[1]) +
                 (g2 - 1.0) * (w[2] * w[2]);
        Jet1 Fx = (a2 + b2 - g2 - 1.0) * (w[0] * w[1]) + (a2 - b2 + g2 - 1.0) * (w[0] * w[2]) -
                  (a2 - b2 - g2 + 1.0) * (w[1] * w[2]);
        double resid = v[n][2] - 2.0 * A.value() * v[n][1] - (E.value() - Fx.value()) * v[n][0];
        CHECK(std::abs(resid) < 1e-8 * std::max(1.0, std::abs(v[n][0])));
    }
}

TEST_CASE("step halving on u changes the endpoint by less than 1e-9") {
    auto run = [&](int steps) {
        WTrajectory traj = sym_trajectory(steps);
        auto u = solve_u(traj, AbgTriple{2.0 / 3.0, 2.0 / 3.0, 2.0 / 3.0}, 1.0, 0.0);
        return u.back()[0];
    };
    CHECK(std::abs(run(2000) - run(4000)) < 1e-9);
}

TEST_CASE("theorem pipeline passes for Theorem A and Theorem B configurations") {
    const auto& cases = golden_cases();
    TheoremOptions opt;
    opt.steps = 1000;

    auto repA = verify_theorem(cases[0], opt);
    CHECK(repA.pass);
    CHECK(repA.max_scale_residual < 1e-6);
    CHECK(repA.max_chazy_residual < 1e-6);
    CHECK(repA.control_scale_residual > 1e-2);

    auto repB = verify_theorem(cases[7], opt);
    CHECK(repB.pass);
    CHECK(repB.max_scale_residual < 1e-6);
    CHECK(repB.control_scale_residual > 1e-2);
}

TEST_CASE("theorem residual converges at fourth order") {
    const auto& pc = golden_cases()[0];
    TheoremOptions coarse, fine;
    coarse.steps = 250;
    fine.steps = 500;
    double r1 = verify_theorem(pc, coarse).max_scale_residual;
    double r2 = verify_theorem(pc, fine).max_scale_residual;
    if (r2 > 1e-10) CHECK(r1 / r2 > 8.0);
}

TEST_CASE("u transported to the s variable solves the associated equation") {
    const auto& pc = golden_cases()[0];  // direct, (4/3,4/3,4/3) -> (2/3,2/3,2/3)
    WTrajectory traj = sym_trajectory(2000);
    auto u = solve_u(traj, pc.abg_tilde.to_abg(), 1.0, 0.0);
    AbgTriple tilde = pc.abg_tilde.to_abg();
    for (std::size_t n = 0; n < traj.size(); ++n) {
        Jet1 s = recover_s(traj.jets[n]);
        double sx = s[1], sxx = s[2];
        if (std::abs(sx) < 1e-6) continue;
        double us = u[n][1] / sx;
        double uss = (u[n][2] - us * sxx) / (sx * sx);
        double resid = uss + 0.25 * potential_V(s[0], tilde) * u[n][0];
        double scale = std::max({1.0, std::abs(uss), std::abs(u[n][0])});
        CHECK(std::abs(resid) / scale < 1e-6);
    }
}

TEST_CASE("sample generator is deterministic and in range") {
    auto a = sample_points(10, 42);
    auto b = sample_points(10, 42);
    auto c = sample_points(10, 43);
    REQUIRE(a.size() == 10);
    bool all_equal = true, any_diff = false;
    for (std::size_t i = 0; i < 10; ++i) {
        all_equal = all_equal && a[i].x == b[i].x && a[i].q == b[i].q;
        any_diff = any_diff || a[i].x != c[i].x;
        CHECK(a[i].x >= 0.5);
        CHECK(a[i].x <= 2.0);
        CHECK(std::abs(a[i].y) <= 1.0);
    }
    CHECK(all_equal);
    CHECK(any_diff);
}

TEST_CASE("ricci and weyl verifiers distinguish solutions from non-solutions") {
    auto pts = sample_points(4, 7);
    FunctionSpec fam = PowerLawSpec{-1.5, 1.0, 0.0};
    auto good = verify_ricci_flat(Side::direct, fam, ConstantSpec{1.0}, pts);
    CHECK(good.pass);
    auto bad = verify_ricci_flat(Side::direct, fam, PowerLawSpec{2.0, 1.0, 0.0}, pts);
    CHECK_FALSE(bad.pass);
    CHECK(bad.max_ricci_norm > 1e-3);

    auto wgood = verify_weyl(Side::direct, fam, pts);
    CHECK(wgood.pass);
    auto wbad = verify_weyl(Side::direct, PolynomialSpec{{0.0, 6.0}}, pts);
    CHECK_FALSE(wbad.pass);
    CHECK(wbad.max_weyl_norm > 1e-3);
}
