#pragma once

#include <array>
#include <map>
#include <string>

#include "cigarlab/jets.hpp"

namespace cigarlab {

struct SingularMetricError : std::runtime_error {
    explicit SingularMetricError(const std::string& what) : std::runtime_error(what) {}
};

struct MissingPotentialError : std::runtime_error {
    explicit MissingPotentialError(const std::string& what) : std::runtime_error(what) {}
};

// Symmetric matrix of jets in the two active coordinates.
struct MetricJets {
    Jet2 g[3][3];
};

// A 2D/3D metric whose components depend on two active coordinates only; the
// remaining coordinates are symmetries (all partials along them vanish).
struct MetricModel {
    int dim = 3;
    std::array<std::string, 3> axes{};  // coordinate names, first `dim` used
    std::array<int, 2> active{0, 1};    // indices of the active axes, ordered
    std::function<MetricJets(double, double)> components;
    ScalarField2 potential;  // soliton potential f, empty if absent
    bool has_potential = false;
    // declared open domain rectangle in the active coordinates
    double lo1 = -1e300, hi1 = 1e300, lo2 = -1e300, hi2 = 1e300;
    std::string name;
    // closed-form ground-truth fields keyed by check id
    std::map<std::string, ScalarField2> oracles;

    bool contains(double c1, double c2) const {
        return c1 > lo1 && c1 < hi1 && c2 > lo2 && c2 < hi2;
    }
    void require_inside(double c1, double c2) const;
};

struct ChristoffelTable {
    double G[3][3][3] = {};  // G[k][i][j], symmetric in (i,j)
};

struct CurvatureRecord {
    double riem[3][3][3][3] = {};  // fully lowered R_{lijk}
    double ricci[3][3] = {};
    double scalar = 0.0;
    double K[3][3] = {};  // coordinate-plane sectional curvature, i != j
};

struct SolitonResidual {
    double eq_residual = 0.0;       // max_ij |Ric_ij - Hess_ij f|
    double bianchi_residual = 0.0;  // |Delta f + |grad f|^2 - 1|
};

// Christoffel symbols as jets (exact through order 2; curvature consumes their
// values and first partials).
struct ChristoffelJets {
    Jet2 G[3][3][3];
};

MetricJets metric_inverse(const MetricJets& g, int dim);
Jet2 metric_det(const MetricJets& g, int dim);

ChristoffelJets christoffel_jets(const MetricModel& m, double c1, double c2);
ChristoffelTable christoffel(const MetricModel& m, double c1, double c2);
CurvatureRecord curvature(const MetricModel& m, double c1, double c2);

// Covariant Hessian values of a scalar field of the active coordinates.
void hessian(const MetricModel& m, const ScalarField2& phi, double c1, double c2,
             double out[3][3]);

double laplacian(const MetricModel& m, const ScalarField2& phi, double c1, double c2);
double grad_norm2(const MetricModel& m, const ScalarField2& phi, double c1, double c2);

SolitonResidual soliton_residual(const MetricModel& m, double c1, double c2);

// Gauss curvature of a 2D model.
double gauss_curvature(const MetricModel& m, double c1, double c2);

}  // namespace cigarlab
