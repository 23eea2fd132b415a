#include "nurowski/ode_family.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "nurowski/errors.hpp"

namespace nurowski {

namespace {

std::array<double, 5> noth_terms(const Jet1& H) {
    if (H.order() < 6) throw DomainError("6th-order residual needs a jet of order >= 6");
    double h2 = H[2], h3 = H[3], h4 = H[4], h5 = H[5], h6 = H[6];
    if (h2 == 0.0) throw DomainError("H'' = 0: distribution undefined");
    return {10.0 * h2 * h2 * h2 * h6, -70.0 * h2 * h2 * h3 * h5, -49.0 * h2 * h2 * h4 * h4,
            280.0 * h2 * h3 * h3 * h4, -175.0 * h3 * h3 * h3 * h3};
}

std::array<double, 5> dual_terms(const Jet1& F) {
    if (F.order() < 6) throw DomainError("6th-order residual needs a jet of order >= 6");
    double f2 = F[2], f3 = F[3], f4 = F[4], f5 = F[5], f6 = F[6];
    if (f2 == 0.0) throw DomainError("F'' = 0: distribution undefined");
    return {10.0 * f2 * f2 * f2 * f6, -80.0 * f2 * f2 * f3 * f5, -51.0 * f2 * f2 * f4 * f4,
            336.0 * f2 * f3 * f3 * f4, -224.0 * f3 * f3 * f3 * f3};
}

double sum5(const std::array<double, 5>& t) { return t[0] + t[1] + t[2] + t[3] + t[4]; }
double maxabs5(const std::array<double, 5>& t) {
    double m = 0.0;
    for (double v : t) m = std::max(m, std::abs(v));
    return m;
}

// Jet of the k-th derivative of H as a function in its own right.
Jet1 shifted(const Jet1& H, int k) {
    Jet1 r(H.x0(), H.order() - k);
    for (int i = 0; i <= r.order(); ++i) r[i] = H[i + k];
    return r;
}

}  // namespace

double noth_residual(const Jet1& H) { return sum5(noth_terms(H)); }
double dual_sixth_residual(const Jet1& F) { return sum5(dual_terms(F)); }
double noth_residual_scale(const Jet1& H) { return maxabs5(noth_terms(H)); }
double dual_sixth_residual_scale(const Jet1& F) { return maxabs5(dual_terms(F)); }

Jet1 p_jet(Side side, const Jet1& HF) {
    if (HF.order() < 3) throw DomainError("p_jet needs a jet of order >= 3");
    if (HF[2] <= 0.0)
        throw DomainError("second derivative must be positive for the exponential substitution");
    Jet1 d2 = shifted(HF, 2);
    Jet1 ratio = derivative(d2) / truncate(d2, d2.order() - 1);
    return (side == Side::direct ? 1.5 : 2.0) * ratio;
}

Jet1 q_from_p(const Jet1& P) {
    if (P.order() < 1) throw DomainError("q_from_p needs a jet of order >= 1");
    Jet1 p = truncate(P, P.order() - 1);
    return p * p - 6.0 * derivative(P);
}

double scale_ode_residual(Side side, const Jet1& f, const Jet1& Q) {
    if (f.order() < 2) throw DomainError("scale ODE residual needs a jet of order >= 2");
    double denom = (side == Side::direct) ? 45.0 : 40.0;
    return f[2] - Q.value() * f.value() / denom;
}

double omega_ode_residual(Side side, const Jet1& Om, const Jet1& P) {
    if (Om.order() < 2) throw DomainError("omega ODE residual needs a jet of order >= 2");
    double o = Om[0], op = Om[1], opp = Om[2];
    double p = P.value();
    if (side == Side::direct) {
        double q = q_from_p(P).value();
        return opp * o - 2.0 * op * op - (2.0 / 3.0) * p * o * op - p * p * o * o / 18.0 -
               q * o * o / 30.0;
    }
    double pprime = P[1];
    return 40.0 * opp * o - 80.0 * op * op - 6.0 * o * o * pprime + o * o * p * p;
}

Jet1 omega_from_solution(Side side, const Jet1& f, const Jet1& P, double intP) {
    if (f.value() == 0.0) throw DomainError("conformal factor pole: 1/f with f = 0");
    if (side == Side::dual) return 1.0 / f;
    // int P as a jet anchored at intP.
    int n = std::min(f.order(), P.order() + 1);
    Jet1 ip(f.x0(), n);
    ip[0] = intP;
    for (int i = 1; i <= n; ++i) ip[i] = P[i - 1];
    return exp((-1.0 / 3.0) * ip) / truncate(f, n);
}

std::pair<double, Jet1> legendre_dual_jets(const Jet1& H) {
    if (H.order() < 2) throw DomainError("Legendre transform needs a jet of order >= 2");
    if (H[2] == 0.0) throw DomainError("Legendre transform non-invertible: H'' = 0");
    const double x = H.x0();
    const double xt = H[1];
    Jet1 F(xt, H.order());
    F[0] = x * xt - H[0];
    F[1] = x;
    if (H.order() >= 2) {
        Jet1 h2 = shifted(H, 2);
        Jet1 inv = 1.0 / h2;             // d x / d xt as a jet in x
        Jet1 cur = inv;                  // F'' as a function of x
        F[2] = cur[0];
        for (int k = 3; k <= H.order(); ++k) {
            cur = truncate(inv, cur.order() - 1) * derivative(cur);  // d/dxt = (1/H'') d/dx
            F[k] = cur[0];
        }
    }
    return {xt, F};
}

}  // namespace nurowski
