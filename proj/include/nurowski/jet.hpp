#pragma once

#include <array>
#include <cmath>
#include <algorithm>

#include "nurowski/errors.hpp"

namespace nurowski {

inline constexpr int kMaxJetOrder = 8;

// Truncated Taylor expansion of a univariate function at a point.
// coeff(i) stores the i-th derivative value (not the Taylor coefficient).
class Jet1 {
public:
    Jet1() = default;
    Jet1(double x0, int order) : x0_(x0), order_(clamp_order(order)) { coeffs_.fill(0.0); }

    static Jet1 constant(double x0, double value, int order) {
        Jet1 j(x0, order);
        j.coeffs_[0] = value;
        return j;
    }
    // The identity function f(x) = x.
    static Jet1 variable(double x0, int order) {
        Jet1 j(x0, order);
        j.coeffs_[0] = x0;
        if (j.order_ >= 1) j.coeffs_[1] = 1.0;
        return j;
    }

    double x0() const { return x0_; }
    int order() const { return order_; }
    double operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
    double& operator[](int i) { return coeffs_[static_cast<std::size_t>(i)]; }
    double value() const { return coeffs_[0]; }

    // Evaluate the truncated series at x0 + h.
    double eval(double h) const {
        double acc = 0.0, fact = 1.0, hp = 1.0;
        for (int i = 0; i <= order_; ++i) {
            if (i > 0) { fact *= i; hp *= h; }
            acc += coeffs_[static_cast<std::size_t>(i)] * hp / fact;
        }
        return acc;
    }

private:
    static int clamp_order(int order) {
        if (order < 0) throw DomainError("jet order must be nonnegative");
        if (order > kMaxJetOrder) throw DomainError("jet order exceeds maximum");
        return order;
    }
    double x0_ = 0.0;
    int order_ = 0;
    std::array<double, kMaxJetOrder + 1> coeffs_{};
};

namespace detail {
// Binomial coefficients up to kMaxJetOrder.
inline double binom(int n, int k) {
    static const auto table = [] {
        std::array<std::array<double, kMaxJetOrder + 1>, kMaxJetOrder + 1> t{};
        for (int n = 0; n <= kMaxJetOrder; ++n) {
            t[n][0] = 1.0;
            for (int k = 1; k <= n; ++k)
                t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0.0);
        }
        return t;
    }();
    return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

inline int common_order(const Jet1& a, const Jet1& b) { return std::min(a.order(), b.order()); }
}  // namespace detail

inline Jet1 truncate(const Jet1& a, int order) {
    Jet1 r(a.x0(), std::min(order, a.order()));
    for (int i = 0; i <= r.order(); ++i) r[i] = a[i];
    return r;
}

// Jet of f' as a function in its own right; order drops by one.
inline Jet1 derivative(const Jet1& a) {
    if (a.order() < 1) throw DomainError("cannot differentiate an order-0 jet");
    Jet1 r(a.x0(), a.order() - 1);
    for (int i = 0; i <= r.order(); ++i) r[i] = a[i + 1];
    return r;
}

inline Jet1 operator+(const Jet1& a, const Jet1& b) {
    Jet1 r(a.x0(), detail::common_order(a, b));
    for (int i = 0; i <= r.order(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Jet1 operator-(const Jet1& a, const Jet1& b) {
    Jet1 r(a.x0(), detail::common_order(a, b));
    for (int i = 0; i <= r.order(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Jet1 operator-(const Jet1& a) {
    Jet1 r(a.x0(), a.order());
    for (int i = 0; i <= r.order(); ++i) r[i] = -a[i];
    return r;
}

inline Jet1 operator*(const Jet1& a, const Jet1& b) {
    Jet1 r(a.x0(), detail::common_order(a, b));
    for (int n = 0; n <= r.order(); ++n) {
        double acc = 0.0;
        for (int i = 0; i <= n; ++i) acc += detail::binom(n, i) * a[i] * b[n - i];
        r[n] = acc;
    }
    return r;
}

inline Jet1 operator*(double c, const Jet1& a) {
    Jet1 r(a.x0(), a.order());
    for (int i = 0; i <= r.order(); ++i) r[i] = c * a[i];
    return r;
}
inline Jet1 operator*(const Jet1& a, double c) { return c * a; }

inline Jet1 operator+(const Jet1& a, double c) {
    Jet1 r = a;
    r[0] += c;
    return r;
}
inline Jet1 operator+(double c, const Jet1& a) { return a + c; }
inline Jet1 operator-(const Jet1& a, double c) { return a + (-c); }
inline Jet1 operator-(double c, const Jet1& a) { return (-a) + c; }

inline Jet1 operator/(const Jet1& a, const Jet1& b) {
    if (b.value() == 0.0) throw DomainError("division by a jet with zero value");
    Jet1 r(a.x0(), detail::common_order(a, b));
    for (int n = 0; n <= r.order(); ++n) {
        double acc = a[n];
        for (int i = 0; i < n; ++i) acc -= detail::binom(n, i) * r[i] * b[n - i];
        r[n] = acc / b[0];
    }
    return r;
}

inline Jet1 operator/(const Jet1& a, double c) { return (1.0 / c) * a; }
inline Jet1 operator/(double c, const Jet1& a) { return Jet1::constant(a.x0(), c, a.order()) / a; }

inline Jet1 exp(const Jet1& a) {
    Jet1 r(a.x0(), a.order());
    r[0] = std::exp(a[0]);
    // h' = f' h gives h^(n+1) = sum C(n,i) f^(i+1) h^(n-i).
    for (int n = 0; n + 1 <= r.order(); ++n) {
        double acc = 0.0;
        for (int i = 0; i <= n; ++i) acc += detail::binom(n, i) * a[i + 1] * r[n - i];
        r[n + 1] = acc;
    }
    return r;
}

inline Jet1 log(const Jet1& a) {
    if (a.value() <= 0.0) throw DomainError("log of a jet with nonpositive value");
    Jet1 r(a.x0(), a.order());
    r[0] = std::log(a[0]);
    if (r.order() >= 1) {
        Jet1 q = derivative(a) / truncate(a, a.order() - 1);  // f'/f
        for (int i = 1; i <= r.order(); ++i) r[i] = q[i - 1];
    }
    return r;
}

// f^p for constant p.  Uses the Taylor-coefficient recurrence, valid for
// f(x0) != 0 (positive base required for fractional p).
inline Jet1 pow(const Jet1& a, double p) {
    const double f0 = a.value();
    bool integral = (p == std::floor(p));
    if (f0 == 0.0 || (!integral && f0 < 0.0))
        throw DomainError("pow on jet requires nonzero (positive for fractional exponent) value");
    const int N = a.order();
    // Taylor coefficients c_i = f^(i)/i!.
    std::array<double, kMaxJetOrder + 1> c{}, q{};
    double fact = 1.0;
    for (int i = 0; i <= N; ++i) {
        if (i > 0) fact *= i;
        c[static_cast<std::size_t>(i)] = a[i] / fact;
    }
    q[0] = std::pow(f0, p);
    for (int n = 1; n <= N; ++n) {
        double acc = 0.0;
        for (int k = 1; k <= n; ++k)
            acc += ((p + 1.0) * k - n) * c[static_cast<std::size_t>(k)] * q[static_cast<std::size_t>(n - k)];
        q[static_cast<std::size_t>(n)] = acc / (n * c[0]);
    }
    Jet1 r(a.x0(), N);
    fact = 1.0;
    for (int i = 0; i <= N; ++i) {
        if (i > 0) fact *= i;
        r[i] = q[static_cast<std::size_t>(i)] * fact;
    }
    return r;
}

inline Jet1 sqrt(const Jet1& a) { return pow(a, 0.5); }

}  // namespace nurowski
