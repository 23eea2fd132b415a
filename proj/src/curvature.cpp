#include "nurowski/curvature.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "nurowski/errors.hpp"

namespace nurowski {

std::pair<int, int> signature(const Mat5d& g) {
    Eigen::SelfAdjointEigenSolver<Mat5d> es(g);
    int neg = 0, pos = 0;
    for (int i = 0; i < 5; ++i) {
        double ev = es.eigenvalues()(i);
        if (ev < 0.0) ++neg;
        else if (ev > 0.0) ++pos;
    }
    return {neg, pos};
}

CurvatureReport curvature_from_derivatives(const Mat5d& g, const std::array<Mat5d, 5>& dg,
                                           const std::array<std::array<Mat5d, 5>, 5>& ddg) {
    const double scale = g.cwiseAbs().maxCoeff();
    Eigen::PartialPivLU<Mat5d> lu(g);
    double det = lu.determinant();
    if (std::abs(det) < 1e-12 * std::pow(scale, 5))
        throw DomainError("degenerate metric: |det| below tolerance");
    Mat5d ginv = lu.inverse();

    // d(g^-1)_c = -g^-1 dg_c g^-1
    std::array<Mat5d, 5> dginv;
    for (int c = 0; c < 5; ++c)
        dginv[static_cast<std::size_t>(c)] = -ginv * dg[static_cast<std::size_t>(c)] * ginv;

    // Gamma^a_{bc}
    double Gamma[5][5][5];
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
            for (int c = 0; c < 5; ++c) {
                double acc = 0.0;
                for (int d = 0; d < 5; ++d)
                    acc += ginv(a, d) * (dg[static_cast<std::size_t>(b)](d, c) +
                                         dg[static_cast<std::size_t>(c)](d, b) -
                                         dg[static_cast<std::size_t>(d)](b, c));
                Gamma[a][b][c] = 0.5 * acc;
            }

    // partial_e Gamma^a_{bc}
    double dGamma[5][5][5][5];
    for (int e = 0; e < 5; ++e)
        for (int a = 0; a < 5; ++a)
            for (int b = 0; b < 5; ++b)
                for (int c = 0; c < 5; ++c) {
                    double acc = 0.0;
                    for (int d = 0; d < 5; ++d) {
                        acc += dginv[static_cast<std::size_t>(e)](a, d) *
                               (dg[static_cast<std::size_t>(b)](d, c) +
                                dg[static_cast<std::size_t>(c)](d, b) -
                                dg[static_cast<std::size_t>(d)](b, c));
                        acc += ginv(a, d) *
                               (ddg[static_cast<std::size_t>(e)][static_cast<std::size_t>(b)](d, c) +
                                ddg[static_cast<std::size_t>(e)][static_cast<std::size_t>(c)](d, b) -
                                ddg[static_cast<std::size_t>(e)][static_cast<std::size_t>(d)](b, c));
                    }
                    dGamma[e][a][b][c] = 0.5 * acc;
                }

    // R^a_{bcd} = d_c Gamma^a_{db} - d_d Gamma^a_{cb}
    //           + Gamma^a_{ce} Gamma^e_{db} - Gamma^a_{de} Gamma^e_{cb}
    double Rupper[5][5][5][5];
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
            for (int c = 0; c < 5; ++c)
                for (int d = 0; d < 5; ++d) {
                    double acc = dGamma[c][a][d][b] - dGamma[d][a][c][b];
                    for (int e = 0; e < 5; ++e)
                        acc += Gamma[a][c][e] * Gamma[e][d][b] - Gamma[a][d][e] * Gamma[e][c][b];
                    Rupper[a][b][c][d] = acc;
                }

    CurvatureReport rep;
    rep.metric = g;
    rep.metric_inv = ginv;

    for (int b = 0; b < 5; ++b)
        for (int d = 0; d < 5; ++d) {
            double acc = 0.0;
            for (int a = 0; a < 5; ++a) acc += Rupper[a][b][a][d];
            rep.ricci(b, d) = acc;
        }
    rep.scalar = (ginv.cwiseProduct(rep.ricci)).sum();

    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
            for (int c = 0; c < 5; ++c)
                for (int d = 0; d < 5; ++d) {
                    double acc = 0.0;
                    for (int e = 0; e < 5; ++e) acc += g(a, e) * Rupper[e][b][c][d];
                    t4(rep.riemann_lower, a, b, c, d) = acc;
                }

    // Weyl in dimension 5.
    const Mat5d& R = rep.ricci;
    const double Rs = rep.scalar;
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
            for (int c = 0; c < 5; ++c)
                for (int d = 0; d < 5; ++d) {
                    double v = t4(rep.riemann_lower, a, b, c, d) -
                               (1.0 / 3.0) * (g(a, c) * R(b, d) - g(a, d) * R(b, c) +
                                              g(b, d) * R(a, c) - g(b, c) * R(a, d)) +
                               (Rs / 12.0) * (g(a, c) * g(b, d) - g(a, d) * g(b, c));
                    t4(rep.weyl, a, b, c, d) = v;
                }

    rep.ricci_norm = rep.ricci.cwiseAbs().maxCoeff();
    double wn = 0.0;
    for (double v : rep.weyl) wn = std::max(wn, std::abs(v));
    rep.weyl_norm = wn;
    return rep;
}

}  // namespace nurowski
