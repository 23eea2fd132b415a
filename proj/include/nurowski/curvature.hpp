#pragma once

#include <array>

#include "nurowski/geometry.hpp"

namespace nurowski {

// Rank-4 tensor on 5 coordinates, flattened as a*125 + b*25 + c*5 + d.
using Tensor4 = std::array<double, 625>;

inline double& t4(Tensor4& t, int a, int b, int c, int d) {
    return t[static_cast<std::size_t>(((a * 5 + b) * 5 + c) * 5 + d)];
}
inline double t4(const Tensor4& t, int a, int b, int c, int d) {
    return t[static_cast<std::size_t>(((a * 5 + b) * 5 + c) * 5 + d)];
}

struct CurvatureReport {
    Mat5d metric = Mat5d::Zero();
    Mat5d metric_inv = Mat5d::Zero();
    Mat5d ricci = Mat5d::Zero();
    double scalar = 0.0;
    Tensor4 riemann_lower{};  // R_{abcd}
    Tensor4 weyl{};           // C_{abcd}
    double ricci_norm = 0.0;  // max abs entry
    double weyl_norm = 0.0;   // max abs component (all indices lowered)
};

// Levi-Civita curvature from pointwise metric value / gradient / Hessian.
CurvatureReport curvature_from_derivatives(const Mat5d& g, const std::array<Mat5d, 5>& dg,
                                           const std::array<std::array<Mat5d, 5>, 5>& ddg);

// Default path: exact derivatives through the order-2 coordinate jets.
template <class MetricFn>
CurvatureReport curvature_at(const MetricFn& fn, const Point5& pt) {
    Mat5<MultiJet2> gm = fn.template eval<MultiJet2>(pt);
    Mat5d g;
    std::array<Mat5d, 5> dg;
    std::array<std::array<Mat5d, 5>, 5> ddg;
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b) {
            const MultiJet2& m = gm(a, b);
            g(a, b) = m.v;
            for (int c = 0; c < 5; ++c) {
                dg[static_cast<std::size_t>(c)](a, b) = m.g(c);
                for (int d = 0; d < 5; ++d)
                    ddg[static_cast<std::size_t>(c)][static_cast<std::size_t>(d)](a, b) = m.h(c, d);
            }
        }
    return curvature_from_derivatives(g, dg, ddg);
}

// Test oracle: metric derivatives by central finite differences of the
// double-valued path; shares only the tensor algebra with the jet path.
template <class MetricFn>
CurvatureReport curvature_at_fd(const MetricFn& fn, const Point5& pt, double step = 1e-4) {
    auto eval = [&](const std::array<double, 5>& c) {
        Point5 p{c[0], c[1], c[2], c[3], c[4]};
        return fn.template eval<double>(p);
    };
    std::array<double, 5> c0{pt.x, pt.y, pt.z, pt.p, pt.q};
    Mat5d g = eval(c0);
    std::array<Mat5d, 5> dg;
    std::array<std::array<Mat5d, 5>, 5> ddg;
    for (int a = 0; a < 5; ++a) {
        auto cp = c0, cm = c0, cpp = c0, cmm = c0;
        cp[static_cast<std::size_t>(a)] += step;
        cm[static_cast<std::size_t>(a)] -= step;
        cpp[static_cast<std::size_t>(a)] += 2.0 * step;
        cmm[static_cast<std::size_t>(a)] -= 2.0 * step;
        Mat5d gp = eval(cp), gm = eval(cm), gpp = eval(cpp), gmm = eval(cmm);
        dg[static_cast<std::size_t>(a)] = (gmm - 8.0 * gm + 8.0 * gp - gpp) / (12.0 * step);
        ddg[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)] =
            (-gmm + 16.0 * gm - 30.0 * g + 16.0 * gp - gpp) / (12.0 * step * step);
    }
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b) {
            if (a == b) continue;
            auto cpp = c0, cpm = c0, cmp = c0, cmm = c0;
            cpp[static_cast<std::size_t>(a)] += step;
            cpp[static_cast<std::size_t>(b)] += step;
            cpm[static_cast<std::size_t>(a)] += step;
            cpm[static_cast<std::size_t>(b)] -= step;
            cmp[static_cast<std::size_t>(a)] -= step;
            cmp[static_cast<std::size_t>(b)] += step;
            cmm[static_cast<std::size_t>(a)] -= step;
            cmm[static_cast<std::size_t>(b)] -= step;
            ddg[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                (eval(cpp) - eval(cpm) - eval(cmp) + eval(cmm)) / (4.0 * step * step);
        }
    return curvature_from_derivatives(g, dg, ddg);
}

}  // namespace nurowski
