#include "cigarlab/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace cigarlab {

void MetricModel::require_inside(double c1, double c2) const {
    if (!contains(c1, c2))
        throw DomainError(name + ": point (" + std::to_string(c1) + ", " + std::to_string(c2) +
                          ") outside declared domain");
}

Jet2 metric_det(const MetricJets& g, int dim) {
    if (dim == 2) return g.g[0][0] * g.g[1][1] - g.g[0][1] * g.g[0][1];
    return g.g[0][0] * (g.g[1][1] * g.g[2][2] - g.g[1][2] * g.g[1][2]) -
           g.g[0][1] * (g.g[0][1] * g.g[2][2] - g.g[1][2] * g.g[0][2]) +
           g.g[0][2] * (g.g[0][1] * g.g[1][2] - g.g[1][1] * g.g[0][2]);
}

MetricJets metric_inverse(const MetricJets& g, int dim) {
    const Jet2 det = metric_det(g, dim);
    if (det.v == 0.0) throw SingularMetricError("metric component matrix not invertible");
    MetricJets inv;
    if (dim == 2) {
        inv.g[0][0] = g.g[1][1] / det;
        inv.g[1][1] = g.g[0][0] / det;
        inv.g[0][1] = -g.g[0][1] / det;
        inv.g[1][0] = inv.g[0][1];
        return inv;
    }
    // adjugate / det, using symmetry
    inv.g[0][0] = (g.g[1][1] * g.g[2][2] - g.g[1][2] * g.g[1][2]) / det;
    inv.g[1][1] = (g.g[0][0] * g.g[2][2] - g.g[0][2] * g.g[0][2]) / det;
    inv.g[2][2] = (g.g[0][0] * g.g[1][1] - g.g[0][1] * g.g[0][1]) / det;
    inv.g[0][1] = (g.g[0][2] * g.g[1][2] - g.g[0][1] * g.g[2][2]) / det;
    inv.g[0][2] = (g.g[0][1] * g.g[1][2] - g.g[0][2] * g.g[1][1]) / det;
    inv.g[1][2] = (g.g[0][1] * g.g[0][2] - g.g[0][0] * g.g[1][2]) / det;
    inv.g[1][0] = inv.g[0][1];
    inv.g[2][0] = inv.g[0][2];
    inv.g[2][1] = inv.g[1][2];
    return inv;
}

namespace {

// Partial derivative of a component jet along coordinate axis `a`: the slot
// derivative for an active axis, zero for a symmetric axis.
Jet2 coord_deriv(const MetricModel& m, const Jet2& f, int a) {
    if (a == m.active[0]) return d_axis(f, 1);
    if (a == m.active[1]) return d_axis(f, 2);
    return Jet2{};
}

void check_positive_definite(const MetricJets& g, int dim) {
    const double m1 = g.g[0][0].v;
    const double m2 = g.g[0][0].v * g.g[1][1].v - g.g[0][1].v * g.g[0][1].v;
    bool ok = m1 > 0.0 && m2 > 0.0;
    if (dim == 3) ok = ok && metric_det(g, 3).v > 0.0;
    if (!ok) throw SingularMetricError("metric not positive definite at sampled point");
}

}  // namespace

ChristoffelJets christoffel_jets(const MetricModel& m, double c1, double c2) {
    m.require_inside(c1, c2);
    const MetricJets g = m.components(c1, c2);
    check_positive_definite(g, m.dim);
    const MetricJets ginv = metric_inverse(g, m.dim);

    Jet2 dg[3][3][3];  // dg[a][i][j] = partial_a g_ij
    for (int a = 0; a < m.dim; ++a)
        for (int i = 0; i < m.dim; ++i)
            for (int j = i; j < m.dim; ++j) {
                dg[a][i][j] = coord_deriv(m, g.g[i][j], a);
                dg[a][j][i] = dg[a][i][j];
            }

    ChristoffelJets out;
    for (int k = 0; k < m.dim; ++k)
        for (int i = 0; i < m.dim; ++i)
            for (int j = i; j < m.dim; ++j) {
                Jet2 s;
                for (int l = 0; l < m.dim; ++l)
                    s = s + ginv.g[k][l] * (dg[i][j][l] + dg[j][i][l] - dg[l][i][j]);
                out.G[k][i][j] = 0.5 * s;
                out.G[k][j][i] = out.G[k][i][j];
            }
    return out;
}

ChristoffelTable christoffel(const MetricModel& m, double c1, double c2) {
    const ChristoffelJets cj = christoffel_jets(m, c1, c2);
    ChristoffelTable t;
    for (int k = 0; k < m.dim; ++k)
        for (int i = 0; i < m.dim; ++i)
            for (int j = 0; j < m.dim; ++j) t.G[k][i][j] = cj.G[k][i][j].v;
    return t;
}

CurvatureRecord curvature(const MetricModel& m, double c1, double c2) {
    const MetricJets g = m.components(c1, c2);
    check_positive_definite(g, m.dim);
    const MetricJets ginv = metric_inverse(g, m.dim);
    const ChristoffelJets cj = christoffel_jets(m, c1, c2);

    // partial_a Gamma^k_ij as values
    double dG[3][3][3][3] = {};
    for (int a = 0; a < m.dim; ++a)
        for (int k = 0; k < m.dim; ++k)
            for (int i = 0; i < m.dim; ++i)
                for (int j = 0; j < m.dim; ++j)
                    dG[a][k][i][j] = coord_deriv(m, cj.G[k][i][j], a).v;

    CurvatureRecord rec;
    // R_{lijk} = g_{lm} (d_j Gamma^m_ik - d_k Gamma^m_ij
    //            + Gamma^n_ik Gamma^m_jn - Gamma^n_ij Gamma^m_kn)
    for (int l = 0; l < m.dim; ++l)
        for (int i = 0; i < m.dim; ++i)
            for (int j = 0; j < m.dim; ++j)
                for (int k = 0; k < m.dim; ++k) {
                    double s = 0.0;
                    for (int mm = 0; mm < m.dim; ++mm) {
                        double t = dG[j][mm][i][k] - dG[k][mm][i][j];
                        for (int n = 0; n < m.dim; ++n)
                            t += cj.G[n][i][k].v * cj.G[mm][j][n].v -
                                 cj.G[n][i][j].v * cj.G[mm][k][n].v;
                        s += g.g[l][mm].v * t;
                    }
                    rec.riem[l][i][j][k] = s;
                }

    for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < m.dim; ++j) {
            double s = 0.0;
            for (int a = 0; a < m.dim; ++a)
                for (int b = 0; b < m.dim; ++b) s += ginv.g[a][b].v * rec.riem[a][i][b][j];
            rec.ricci[i][j] = s;
        }

    for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < m.dim; ++j) rec.scalar += ginv.g[i][j].v * rec.ricci[i][j];

    for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < m.dim; ++j) {
            if (i == j) continue;
            const double gram =
                g.g[i][i].v * g.g[j][j].v - g.g[i][j].v * g.g[i][j].v;
            rec.K[i][j] = rec.riem[i][j][i][j] / gram;
        }
    return rec;
}

void hessian(const MetricModel& m, const ScalarField2& phi, double c1, double c2,
             double out[3][3]) {
    const ChristoffelTable G = christoffel(m, c1, c2);
    const Jet2 f = phi(c1, c2);
    const double df[3] = {m.active[0] == 0 ? f.d1 : (m.active[1] == 0 ? f.d2 : 0.0),
                          m.active[0] == 1 ? f.d1 : (m.active[1] == 1 ? f.d2 : 0.0),
                          m.active[0] == 2 ? f.d1 : (m.active[1] == 2 ? f.d2 : 0.0)};
    auto second = [&](int i, int j) -> double {
        const bool i1 = i == m.active[0], i2 = i == m.active[1];
        const bool j1 = j == m.active[0], j2 = j == m.active[1];
        if (i1 && j1) return f.d11;
        if (i2 && j2) return f.d22;
        if ((i1 && j2) || (i2 && j1)) return f.d12;
        return 0.0;
    };
    for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < m.dim; ++j) {
            double s = second(i, j);
            for (int k = 0; k < m.dim; ++k) s -= G.G[k][i][j] * df[k];
            out[i][j] = s;
        }
}

double laplacian(const MetricModel& m, const ScalarField2& phi, double c1, double c2) {
    double H[3][3];
    hessian(m, phi, c1, c2, H);
    const MetricJets ginv = metric_inverse(m.components(c1, c2), m.dim);
    double s = 0.0;
    for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < m.dim; ++j) s += ginv.g[i][j].v * H[i][j];
    return s;
}

double grad_norm2(const MetricModel& m, const ScalarField2& phi, double c1, double c2) {
    const Jet2 f = phi(c1, c2);
    const MetricJets ginv = metric_inverse(m.components(c1, c2), m.dim);
    double df[3] = {};
    df[m.active[0]] = f.d1;
    df[m.active[1]] = f.d2;
    double s = 0.0;
    for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < m.dim; ++j) s += ginv.g[i][j].v * df[i] * df[j];
    return s;
}

SolitonResidual soliton_residual(const MetricModel& m, double c1, double c2) {
    if (!m.has_potential) throw MissingPotentialError(m.name + ": no soliton potential");
    const CurvatureRecord cur = curvature(m, c1, c2);
    double H[3][3];
    hessian(m, m.potential, c1, c2, H);
    SolitonResidual res;
    for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < m.dim; ++j)
            res.eq_residual = std::max(res.eq_residual, std::abs(cur.ricci[i][j] - H[i][j]));
    const double lap = laplacian(m, m.potential, c1, c2);
    const double gn2 = grad_norm2(m, m.potential, c1, c2);
    res.bianchi_residual = std::abs(lap + gn2 - 1.0);
    return res;
}

double gauss_curvature(const MetricModel& m, double c1, double c2) {
    if (m.dim != 2) throw DomainError("gauss_curvature: model is not 2-dimensional");
    const MetricJets g = m.components(c1, c2);
    const CurvatureRecord cur = curvature(m, c1, c2);
    const double det = g.g[0][0].v * g.g[1][1].v - g.g[0][1].v * g.g[0][1].v;
    return cur.riem[0][1][0][1] / det;
}

}  // namespace cigarlab
