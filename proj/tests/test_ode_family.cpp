#include <doctest.h>

#include <cmath>
#include <random>

#include "nurowski/chazy.hpp"
#include "nurowski/function_spec.hpp"
#include "nurowski/ode_family.hpp"

using namespace nurowski;

namespace {

Jet1 hjet(double exponent, double x) { return family_hjet(PowerLawSpec{exponent, 1.0, 0.0}, x, 6); }

Jet1 scaled(const Jet1& j, double lam) {
    Jet1 r = j;
    for (int i = 0; i <= r.order(); ++i) r[i] *= lam;
    return r;
}

Jet1 power_jet(double x, double p, int order) { return pow(Jet1::variable(x, order), p); }

}  // namespace

TEST_CASE("noth residual on closed-form families") {
    Jet1 flat = family_hjet(ConstantSpec{1.0}, 3.0, 6);
    CHECK(noth_residual(flat) == 0.0);

    for (double a : {-1.5, -2.5, -4.0}) {
        for (double x : {1.0, 0.7, 1.9}) {
            Jet1 H = hjet(a, x);
            CHECK(std::abs(noth_residual(H)) / noth_residual_scale(H) < 1e-9);
        }
    }

    Jet1 six = family_hjet(PolynomialSpec{{0.0, 6.0}}, 1.0, 6);
    CHECK(noth_residual(six) == doctest::Approx(-226800.0));
}

TEST_CASE("dual sixth-order residual on closed-form families") {
    Jet1 flat = family_hjet(ConstantSpec{1.0}, 2.0, 6);
    CHECK(dual_sixth_residual(flat) == 0.0);

    for (double b : {-3.0, -4.0 / 3.0, -5.0 / 3.0}) {
        for (double x : {1.0, 0.8, 1.6}) {
            Jet1 F = hjet(b, x);
            CHECK(std::abs(dual_sixth_residual(F)) / dual_sixth_residual_scale(F) < 1e-9);
        }
    }

    Jet1 six = family_hjet(PolynomialSpec{{0.0, 6.0}}, 1.0, 6);
    CHECK(dual_sixth_residual(six) == doctest::Approx(-290304.0));
}

TEST_CASE("both residuals are homogeneous of degree 4") {
    Jet1 G = family_hjet(PolynomialSpec{{0.0, 6.0}}, 1.2, 6);
    Jet1 R(1.0, 6);  // generic non-solution jet
    for (int i = 0; i <= 6; ++i) R[i] = 0.3 * (i + 1) * (i % 2 ? 1.0 : -1.0);
    R[2] = 1.7;
    for (double lam : {2.0, 10.0}) {
        for (const Jet1* j : {&G, &R}) {
            CHECK(noth_residual(scaled(*j, lam)) ==
                  doctest::Approx(std::pow(lam, 4) * noth_residual(*j)).epsilon(1e-12));
            CHECK(dual_sixth_residual(scaled(*j, lam)) ==
                  doctest::Approx(std::pow(lam, 4) * dual_sixth_residual(*j)).epsilon(1e-12));
        }
    }
}

TEST_CASE("p_jet point values") {
    Jet1 H = hjet(-1.5, 1.0);
    Jet1 P = p_jet(Side::direct, H);
    CHECK(P.value() == doctest::Approx(-9.0 / 4.0));

    Jet1 F = hjet(-4.0 / 3.0, 1.0);
    Jet1 Pd = p_jet(Side::dual, F);
    CHECK(Pd.value() == doctest::Approx(-8.0 / 3.0));

    Jet1 flat = family_hjet(ConstantSpec{2.0}, 1.0, 6);
    Jet1 Pf = p_jet(Side::direct, flat);
    for (int i = 0; i <= Pf.order(); ++i) CHECK(Pf[i] == 0.0);

    Jet1 neg = scaled(flat, -1.0);
    CHECK_THROWS_AS(p_jet(Side::direct, neg), DomainError);
}

TEST_CASE("q_from_p point values") {
    Jet1 zero(1.0, 3);
    Jet1 Q0 = q_from_p(zero);
    for (int i = 0; i <= Q0.order(); ++i) CHECK(Q0[i] == 0.0);

    Jet1 P1 = (-9.0 / 4.0) * power_jet(1.0, -1.0, 3);
    CHECK(q_from_p(P1).value() == doctest::Approx(-135.0 / 16.0));
    Jet1 P2 = (-8.0 / 3.0) * power_jet(1.0, -1.0, 3);
    CHECK(q_from_p(P2).value() == doctest::Approx(-80.0 / 9.0));
}

TEST_CASE("scale ODE residual on Euler branches") {
    Jet1 expj(0.3, 2);
    double e = std::exp(0.3);
    expj[0] = e;
    expj[1] = e;
    expj[2] = e;
    Jet1 q45 = Jet1::constant(0.3, 45.0, 2);
    CHECK(scale_ode_residual(Side::direct, expj, q45) == doctest::Approx(0.0));

    for (double x : {1.0, 1.7}) {
        Jet1 Qd = (-135.0 / 16.0) * power_jet(x, -2.0, 2);
        Jet1 rho = power_jet(x, 0.75, 2);
        CHECK(std::abs(scale_ode_residual(Side::direct, rho, Qd)) < 1e-12);
        Jet1 rho2 = power_jet(x, 0.25, 2);
        CHECK(std::abs(scale_ode_residual(Side::direct, rho2, Qd)) < 1e-12);

        Jet1 Qn = (-80.0 / 9.0) * power_jet(x, -2.0, 2);
        Jet1 nu = power_jet(x, 2.0 / 3.0, 2);
        CHECK(std::abs(scale_ode_residual(Side::dual, nu, Qn)) < 1e-12);
    }
}

TEST_CASE("scale ODE residual is linear in f") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    for (int trial = 0; trial < 20; ++trial) {
        Jet1 f(1.0, 2), g(1.0, 2), Q(1.0, 2);
        for (int i = 0; i <= 2; ++i) {
            f[i] = dist(rng);
            g[i] = dist(rng);
            Q[i] = dist(rng);
        }
        double a = dist(rng), b = dist(rng);
        Jet1 comb = a * f + b * g;
        double lhs = scale_ode_residual(Side::direct, comb, Q);
        double rhs = a * scale_ode_residual(Side::direct, f, Q) +
                     b * scale_ode_residual(Side::direct, g, Q);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("omega ODE residual on the Ricci-flat factors") {
    Jet1 P1 = (-9.0 / 4.0) * power_jet(1.0, -1.0, 3);
    Jet1 one = Jet1::constant(1.0, 1.0, 2);
    CHECK(std::abs(omega_ode_residual(Side::direct, one, P1)) < 1e-12);

    Jet1 P2 = (-8.0 / 3.0) * power_jet(1.0, -1.0, 3);
    Jet1 om = power_jet(1.0, -2.0 / 3.0, 2);
    CHECK(std::abs(omega_ode_residual(Side::dual, om, P2)) < 1e-12);

    Jet1 zero(1.0, 2);
    CHECK(omega_ode_residual(Side::direct, zero, P1) == 0.0);
    CHECK(omega_ode_residual(Side::dual, zero, P2) == 0.0);
}

TEST_CASE("omega_from_solution recovers the conformal factors") {
    double x = 1.7;
    Jet1 P = (-9.0 / 4.0) * power_jet(x, -1.0, 4);
    double intP = -2.25 * std::log(x);

    Jet1 rho = power_jet(x, 0.75, 3);
    Jet1 om1 = omega_from_solution(Side::direct, rho, P, intP);
    CHECK(om1[0] == doctest::Approx(1.0));
    CHECK(std::abs(om1[1]) < 1e-12);
    CHECK(std::abs(om1[2]) < 1e-12);

    Jet1 rho2 = power_jet(x, 0.25, 3);
    Jet1 om2 = omega_from_solution(Side::direct, rho2, P, intP);
    Jet1 ref = power_jet(x, 0.5, 3);
    for (int i = 0; i <= 2; ++i) CHECK(om2[i] == doctest::Approx(ref[i]));

    Jet1 nu = Jet1::constant(x, 1.0, 3);
    Jet1 om3 = omega_from_solution(Side::dual, nu, P, 0.0);
    CHECK(om3[0] == doctest::Approx(1.0));
    CHECK(om3[1] == doctest::Approx(0.0));

    Jet1 zero(x, 3);
    CHECK_THROWS_AS(omega_from_solution(Side::dual, zero, P, 0.0), DomainError);
}

TEST_CASE("legendre transform point examples") {
    Jet1 H = family_hjet(ConstantSpec{1.0}, 1.0, 5);
    auto [xt, F] = legendre_dual_jets(H);
    CHECK(xt == doctest::Approx(1.0));
    CHECK(F[2] == doctest::Approx(1.0));
    CHECK(F[0] == doctest::Approx(0.5));
    CHECK(F[1] == doctest::Approx(1.0));

    Jet1 H2 = hjet(-1.5, 4.0);
    auto [xt2, F2] = legendre_dual_jets(H2);
    CHECK(xt2 == doctest::Approx(-1.0));
    CHECK(F2[2] == doctest::Approx(8.0));
    // F'' = -8 xt^{-3} on the dual side
    CHECK(F2[3] == doctest::Approx(24.0));
}

TEST_CASE("legendre duality transfers Noth solutions to the dual equation") {
    for (double a : {-1.5, -2.5, -4.0}) {
        for (double x : {0.9, 1.4, 2.2}) {
            Jet1 H = hjet(a, x);
            REQUIRE(std::abs(noth_residual(H)) / noth_residual_scale(H) < 1e-9);
            auto [xt, F] = legendre_dual_jets(H);
            CHECK(std::abs(dual_sixth_residual(F)) / dual_sixth_residual_scale(F) < 1e-7);
        }
    }
}

TEST_CASE("noth residual vanishes exactly when the k=3/2 Chazy residual does") {
    for (double a : {-1.5, -2.5, -4.0}) {
        Jet1 H = hjet(a, 1.2);
        Jet1 P = p_jet(Side::direct, H);
        CHECK(std::abs(chazy_residual(1.5, P)) < 1e-9);
    }
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        Jet1 H(1.0, 6);
        for (int i = 0; i <= 6; ++i) H[i] = dist(rng);
        H[2] = std::abs(H[2]) + 0.5;  // keep the branch real
        double rn = noth_residual(H);
        double rc = chazy_residual(1.5, p_jet(Side::direct, H));
        CHECK(rn * rc > 0.0);  // same sign, both nonzero
    }
}
