#pragma once

#include <array>

#include <Eigen/Dense>

#include "nurowski/errors.hpp"
#include "nurowski/function_spec.hpp"
#include "nurowski/multijet.hpp"
#include "nurowski/ode_family.hpp"

namespace nurowski {

struct Point5 {
    double x = 0.0, y = 0.0, z = 0.0, p = 0.0, q = 0.0;
};

template <class S>
using Mat5 = Eigen::Matrix<S, 5, 5>;
template <class S>
using Row5 = Eigen::Matrix<S, 1, 5>;

// Second, third and fourth derivative of H (direct) or F (dual) at the
// evaluation point, lifted into the scalar type.
template <class S>
struct FamilyEval {
    S d2, d3, d4;
};

template <class S>
std::array<S, 5> seed_point(const Point5& pt) {
    return {seed_coord<S>(pt.x, 0), seed_coord<S>(pt.y, 1), seed_coord<S>(pt.z, 2),
            seed_coord<S>(pt.p, 3), seed_coord<S>(pt.q, 4)};
}

template <class S>
FamilyEval<S> lift_family(const Jet1& hjet) {
    return {lift_deriv<S>(hjet, 2, 0), lift_deriv<S>(hjet, 3, 0), lift_deriv<S>(hjet, 4, 0)};
}

// Rows hold the components of omega_1..omega_5 in the (dx,dy,dz,dp,dq) basis.
template <class S>
Mat5<S> omega_coframe(Side side, const std::array<S, 5>& c, const FamilyEval<S>& f) {
    if (scalar_value(f.d2) == 0.0) throw DomainError("omega coframe: vanishing second derivative");
    const S& x [[maybe_unused]] = c[0];
    const S& p = c[3];
    const S& q = c[4];
    Mat5<S> w = Mat5<S>::Zero();
    if (side == Side::direct) {
        w(0, 0) = -p;
        w(0, 1) = S(1.0);
        w(1, 0) = -q;
        w(1, 3) = S(1.0);
        w(2, 0) = -(q * q) / f.d2;
        w(2, 2) = S(1.0);
        w(3, 0) = -(f.d3 / f.d2) * q;
        w(3, 4) = S(1.0);
        w(4, 0) = -f.d2 / 2.0;
    } else {
        w(0, 0) = -p * f.d2;
        w(0, 1) = S(1.0);
        w(1, 0) = -q * f.d2;
        w(1, 3) = S(1.0);
        w(2, 0) = -(q * q) * f.d2 * f.d2;
        w(2, 2) = S(1.0);
        w(3, 0) = (f.d3 / f.d2) * q;
        w(3, 4) = S(1.0);
        w(4, 0) = S(-0.5);
    }
    return w;
}

// Adapted coframe theta_1..theta_5 with the gauge a41 = a52 = 0 (resp. b).
template <class S>
Mat5<S> theta_coframe(Side side, const std::array<S, 5>& c, const FamilyEval<S>& f) {
    using std::pow;
    if (scalar_value(f.d2) <= 0.0)
        throw DomainError("theta coframe: second derivative must be positive");
    Mat5<S> w = omega_coframe(side, c, f);
    const S& q = c[4];
    Mat5<S> th = Mat5<S>::Zero();
    const double c23 = std::pow(2.0, 2.0 / 3.0);
    const double c13 = std::pow(2.0, 1.0 / 3.0);
    if (side == Side::direct) {
        th.row(0) = w.row(2) - ((2.0 / f.d2) * q) * w.row(1);
        th.row(1) = w.row(0);
        th.row(2) = pow(2.0 / f.d2, 1.0 / 3.0) * w.row(1);
        S a42 = (c23 / 30.0) * (3.0 * f.d2 * f.d4 - 5.0 * f.d3 * f.d3) / pow(f.d2, 8.0 / 3.0);
        S a43 = (-c13 / 3.0) * f.d3 / pow(f.d2, 4.0 / 3.0);
        S fac = pow(2.0 / f.d2, 2.0 / 3.0);
        th.row(3) = fac * w.row(3) + a42 * th.row(1) + a43 * th.row(2);
        th.row(4) = fac * w.row(4);
    } else {
        th.row(0) = w.row(2) - (2.0 * f.d2 * q) * w.row(1);
        th.row(1) = w.row(0);
        th.row(2) = pow(2.0 * f.d2, 1.0 / 3.0) * w.row(1);
        S b42 = (-c23 / 30.0) * (3.0 * f.d2 * f.d4 - 4.0 * f.d3 * f.d3) / pow(f.d2, 10.0 / 3.0);
        S b43 = (c13 / 3.0) * f.d3 / pow(f.d2, 5.0 / 3.0);
        S fac = pow(2.0 * f.d2, 2.0 / 3.0);
        th.row(3) = fac * w.row(3) + b42 * th.row(1) + b43 * th.row(2);
        th.row(4) = fac * w.row(4);
    }
    return th;
}

// Symmetrised product of two 1-forms: theta^a theta^b = (1/2)(ab^T + ba^T).
template <class S>
Mat5<S> sym_prod(const Row5<S>& a, const Row5<S>& b) {
    Mat5<S> m = a.transpose() * b;
    return S(0.5) * (m + m.transpose()).eval();
}

// g = 2 theta1 theta5 - 2 theta2 theta4 + (4/3) theta3 theta3
template <class S>
Mat5<S> nurowski_metric(const Mat5<S>& th) {
    Row5<S> t1 = th.row(0), t2 = th.row(1), t3 = th.row(2), t4 = th.row(3), t5 = th.row(4);
    return (S(2.0) * sym_prod<S>(t1, t5) - S(2.0) * sym_prod<S>(t2, t4) +
            S(4.0 / 3.0) * sym_prod<S>(t3, t3))
        .eval();
}

enum class DualGtildeForm { cosmetic, rough };

// The explicit conformally rescaled metric: direct side equals
// 2^{-2/3} (H'')^{2/3} g, dual side 2^{1/3} (F'')^{-2/3} g.
template <class S>
Mat5<S> gtilde_metric(Side side, const std::array<S, 5>& c, const FamilyEval<S>& f,
                      DualGtildeForm form = DualGtildeForm::cosmetic) {
    if (scalar_value(f.d2) <= 0.0)
        throw DomainError("gtilde: second derivative must be positive");
    Mat5<S> w = omega_coframe(side, c, f);
    Row5<S> o1 = w.row(0), o2 = w.row(1), o3 = w.row(2), o4 = w.row(3), o5 = w.row(4);
    const S& q = c[4];
    S r = f.d3 / f.d2;
    if (side == Side::direct) {
        S P = 1.5 * r;
        S Pp = 1.5 * (f.d4 / f.d2 - r * r);
        S Q = P * P - 6.0 * Pp;
        S E = f.d2;  // exp((2/3) int P)
        Row5<S> mid = (P / 6.0) * o1 + o2;
        Row5<S> ot3 = E * o3;
        Row5<S> ot5 = (1.0 / E) * o5;
        return ((Q / 45.0) * sym_prod<S>(o1, o1) + S(4.0 / 3.0) * sym_prod<S>(mid, mid) +
                S(2.0) * sym_prod<S>(ot3, ot5) - S(2.0) * sym_prod<S>(o1, o4) -
                (4.0 * q) * sym_prod<S>(o2, ot5))
            .eval();
    }
    S P = 2.0 * r;
    S Pp = 2.0 * (f.d4 / f.d2 - r * r);
    S Q = P * P - 6.0 * Pp;
    S E = f.d2;  // exp((1/2) int P)
    if (form == DualGtildeForm::cosmetic) {
        Row5<S> ot1 = (1.0 / E) * o1;
        Row5<S> ot3 = (1.0 / E) * o3;
        Row5<S> ot4 = E * o4;
        Row5<S> ot5 = E * o5;
        return ((-1.0 / 30.0) * Q * sym_prod<S>(ot1, ot1) -
                (S(2.0 / 3.0) * P) * sym_prod<S>(ot1, o2) + S(8.0 / 3.0) * sym_prod<S>(o2, o2) +
                S(4.0) * sym_prod<S>(ot3, ot5) - S(4.0) * sym_prod<S>(ot1, ot4) -
                (8.0 * q) * (E * sym_prod<S>(o2, o5)))
            .eval();
    }
    // Eq. before the tilde substitution: coefficients carry the e^{int P} factors.
    S einv = 1.0 / (E * E);  // exp(-int P)
    return (((1.0 / 30.0) * (6.0 * Pp - P * P) * einv) * sym_prod<S>(o1, o1) -
            ((2.0 / 3.0) * P / E) * sym_prod<S>(o1, o2) + S(8.0 / 3.0) * sym_prod<S>(o2, o2) +
            S(4.0) * sym_prod<S>(o3, o5) - S(4.0) * sym_prod<S>(o1, o4) -
            (8.0 * q * E) * sym_prod<S>(o2, o5))
        .eval();
}

// Eigenvalue sign count (negatives, positives) of a symmetric 5x5.
std::pair<int, int> signature(const Mat5d& g);

// Metric-as-function objects consumed by curvature_at: the scalar type decides
// whether plain values or coordinate jets flow through the assembly.
struct NurowskiMetricFn {
    Side side = Side::direct;
    FunctionSpec family;  // describes H'' (direct) or F'' (dual)

    template <class S>
    Mat5<S> eval(const Point5& pt) const {
        Jet1 hj = family_hjet(family, pt.x, 6);
        auto coords = seed_point<S>(pt);
        auto fam = lift_family<S>(hj);
        return nurowski_metric(theta_coframe(side, coords, fam));
    }
};

struct GtildeMetricFn {
    Side side = Side::direct;
    FunctionSpec family;
    DualGtildeForm form = DualGtildeForm::cosmetic;

    template <class S>
    Mat5<S> eval(const Point5& pt) const {
        Jet1 hj = family_hjet(family, pt.x, 6);
        auto coords = seed_point<S>(pt);
        auto fam = lift_family<S>(hj);
        return gtilde_metric(side, coords, fam, form);
    }
};

// Omega^2 * inner, differentiating through Omega(x).
template <class Inner>
struct ConformalMetricFn {
    Inner inner;
    FunctionSpec omega;

    template <class S>
    Mat5<S> eval(const Point5& pt) const {
        Jet1 oj = jet_eval(omega, pt.x, 2);
        if (oj.value() == 0.0) throw DomainError("conformal factor vanishes at sample point");
        S om = lift_deriv<S>(oj, 0, 0);
        return ((om * om) * inner.template eval<S>(pt)).eval();
    }
};

}  // namespace nurowski
