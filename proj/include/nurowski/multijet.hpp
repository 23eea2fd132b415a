#pragma once

#include <cmath>
#include <array>

#include <Eigen/Dense>

#include "nurowski/errors.hpp"
#include "nurowski/jet.hpp"

namespace nurowski {

using Vec5 = Eigen::Matrix<double, 5, 1>;
using Mat5d = Eigen::Matrix<double, 5, 5>;

// Order-2 truncated expansion of a scalar in the 5 coordinates:
// value, gradient and (symmetric) Hessian.
struct MultiJet2 {
    double v = 0.0;
    Vec5 g = Vec5::Zero();
    Mat5d h = Mat5d::Zero();

    MultiJet2() = default;
    MultiJet2(double value) : v(value) {}  // NOLINT: implicit lift of constants

    static MultiJet2 variable(double value, int coord) {
        MultiJet2 m(value);
        m.g(coord) = 1.0;
        return m;
    }
};

inline MultiJet2 operator+(const MultiJet2& a, const MultiJet2& b) {
    MultiJet2 r;
    r.v = a.v + b.v;
    r.g = a.g + b.g;
    r.h = a.h + b.h;
    return r;
}

inline MultiJet2 operator-(const MultiJet2& a, const MultiJet2& b) {
    MultiJet2 r;
    r.v = a.v - b.v;
    r.g = a.g - b.g;
    r.h = a.h - b.h;
    return r;
}

inline MultiJet2 operator-(const MultiJet2& a) {
    MultiJet2 r;
    r.v = -a.v;
    r.g = -a.g;
    r.h = -a.h;
    return r;
}

inline MultiJet2 operator*(const MultiJet2& a, const MultiJet2& b) {
    MultiJet2 r;
    r.v = a.v * b.v;
    r.g = a.v * b.g + b.v * a.g;
    r.h = a.v * b.h + b.v * a.h + a.g * b.g.transpose() + b.g * a.g.transpose();
    return r;
}

// Composition with a univariate function given by value/first/second derivative
// at a.v:  f(a) carries f1 * grad and f1 * hess + f2 * grad grad^T.
inline MultiJet2 compose(double f0, double f1, double f2, const MultiJet2& a) {
    MultiJet2 r;
    r.v = f0;
    r.g = f1 * a.g;
    r.h = f1 * a.h + f2 * (a.g * a.g.transpose());
    return r;
}

inline MultiJet2 inverse(const MultiJet2& a) {
    if (a.v == 0.0) throw DomainError("inverse of multijet with zero value");
    double iv = 1.0 / a.v;
    return compose(iv, -iv * iv, 2.0 * iv * iv * iv, a);
}

inline MultiJet2 operator/(const MultiJet2& a, const MultiJet2& b) { return a * inverse(b); }

inline MultiJet2 operator*(double c, const MultiJet2& a) { return MultiJet2(c) * a; }
inline MultiJet2 operator*(const MultiJet2& a, double c) { return a * MultiJet2(c); }
inline MultiJet2 operator/(const MultiJet2& a, double c) { return a * (1.0 / c); }
inline MultiJet2 operator/(double c, const MultiJet2& a) { return c * inverse(a); }
inline MultiJet2 operator+(const MultiJet2& a, double c) { return a + MultiJet2(c); }
inline MultiJet2 operator+(double c, const MultiJet2& a) { return a + MultiJet2(c); }
inline MultiJet2 operator-(const MultiJet2& a, double c) { return a - MultiJet2(c); }
inline MultiJet2 operator-(double c, const MultiJet2& a) { return MultiJet2(c) - a; }
inline MultiJet2& operator+=(MultiJet2& a, const MultiJet2& b) { return a = a + b; }
inline MultiJet2& operator-=(MultiJet2& a, const MultiJet2& b) { return a = a - b; }
inline MultiJet2& operator*=(MultiJet2& a, const MultiJet2& b) { return a = a * b; }

inline MultiJet2 exp(const MultiJet2& a) {
    double e = std::exp(a.v);
    return compose(e, e, e, a);
}

inline MultiJet2 log(const MultiJet2& a) {
    if (a.v <= 0.0) throw DomainError("log of multijet with nonpositive value");
    return compose(std::log(a.v), 1.0 / a.v, -1.0 / (a.v * a.v), a);
}

inline MultiJet2 pow(const MultiJet2& a, double p) {
    bool integral = (p == std::floor(p));
    if (a.v == 0.0 || (!integral && a.v < 0.0))
        throw DomainError("pow on multijet requires nonzero (positive for fractional exponent) value");
    double f0 = std::pow(a.v, p);
    double f1 = p * f0 / a.v;
    double f2 = p * (p - 1.0) * f0 / (a.v * a.v);
    return compose(f0, f1, f2, a);
}

inline MultiJet2 sqrt(const MultiJet2& a) { return pow(a, 0.5); }

// Lift the d-th derivative slot of a univariate jet in coordinate `coord`
// into a scalar of type S.  For MultiJet2 the gradient/Hessian pick up the
// next two jet coefficients.
template <class S>
S lift_deriv(const Jet1& j, int d, int coord);

template <>
inline double lift_deriv<double>(const Jet1& j, int d, int /*coord*/) {
    return j[d];
}

template <>
inline MultiJet2 lift_deriv<MultiJet2>(const Jet1& j, int d, int coord) {
    if (d + 2 > j.order()) throw DomainError("jet order too low for multijet lift");
    MultiJet2 m(j[d]);
    m.g(coord) = j[d + 1];
    m.h(coord, coord) = j[d + 2];
    return m;
}

// Coordinate seeding: plain values for double, first-order variables for MultiJet2.
template <class S>
S seed_coord(double value, int coord);

template <>
inline double seed_coord<double>(double value, int /*coord*/) {
    return value;
}

template <>
inline MultiJet2 seed_coord<MultiJet2>(double value, int coord) {
    return MultiJet2::variable(value, coord);
}

template <class S>
double scalar_value(const S& s);

template <>
inline double scalar_value<double>(const double& s) {
    return s;
}

template <>
inline double scalar_value<MultiJet2>(const MultiJet2& s) {
    return s.v;
}

}  // namespace nurowski

namespace Eigen {
template <>
struct NumTraits<nurowski::MultiJet2> : GenericNumTraits<nurowski::MultiJet2> {
    typedef nurowski::MultiJet2 Real;
    typedef nurowski::MultiJet2 NonInteger;
    typedef nurowski::MultiJet2 Nested;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 10,
        MulCost = 40
    };
    static inline Real epsilon() { return Real(NumTraits<double>::epsilon()); }
    static inline Real dummy_precision() { return Real(NumTraits<double>::dummy_precision()); }
    static inline int digits10() { return NumTraits<double>::digits10(); }
};
}  // namespace Eigen
