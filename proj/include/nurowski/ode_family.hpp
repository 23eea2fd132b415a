#pragma once

#include <utility>

#include "nurowski/jet.hpp"

namespace nurowski {

// direct = the H-picture (k = 3/2 chain), dual = the F-picture (k = 2/3 chain).
enum class Side { direct, dual };

// 10(H'')^3 H^(6) - 70(H'')^2 H^(3) H^(5) - 49(H'')^2 (H^(4))^2
//   + 280 H'' (H^(3))^2 H^(4) - 175 (H^(3))^4
double noth_residual(const Jet1& H);

// 10(F'')^3 F^(6) - 80(F'')^2 F^(3) F^(5) - 51(F'')^2 (F^(4))^2
//   + 336 F'' (F^(3))^2 F^(4) - 224 (F^(3))^4
double dual_sixth_residual(const Jet1& F);

// Largest absolute monomial of the residual, for relative tolerances.
double noth_residual_scale(const Jet1& H);
double dual_sixth_residual_scale(const Jet1& F);

// P from the substitution H'' = exp((2/3) int P) resp. F'' = exp((1/2) int P):
// direct P = (3/2) H'''/H'', dual P = 2 F'''/F''.  Requires positive second
// derivative (real branch of the exponential).
Jet1 p_jet(Side side, const Jet1& HF);

// Q = P^2 - 6P'
Jet1 q_from_p(const Jet1& P);

// direct: f'' - Q f / 45, dual: f'' - Q f / 40 (values at the common point).
double scale_ode_residual(Side side, const Jet1& f, const Jet1& Q);

// The conformal-factor ODE before the 1/rho (resp. 1/nu) substitution.
double omega_ode_residual(Side side, const Jet1& Om, const Jet1& P);

// direct: Omega = (1/f) exp(-(1/3) int P) with int P anchored by intP at the
// expansion point; dual: Omega = 1/f.
Jet1 omega_from_solution(Side side, const Jet1& f, const Jet1& P, double intP);

// Legendre transform H(x) + F(xt) = x xt: returns (xt, F-jet at xt).
std::pair<double, Jet1> legendre_dual_jets(const Jet1& H);

}  // namespace nurowski
