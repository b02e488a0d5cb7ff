#pragma once

#include "cigarlab/jets.hpp"

namespace cigarlab {

// The scalar first-variation field V(r, x) of the conformal factor exponential;
// the derived v = (4 - r^2) V is the first variation of the potential.
struct VariationField {
    ScalarField2 V;
};

// Metric perturbation data: diagonal components h1 (rr-slot) and h2 (xx-slot),
// the scalar v, and the radial gauge profile A(r).
struct PerturbationComponents {
    ScalarField2 h1, h2, v;
    ScalarField1 A;  // may be the zero function
};

// Per-point values of every intermediate operator entering the assembly.
struct LinearizedTensors {
    double lap_h11 = 0, lap_h22 = 0, lap_h33 = 0;  // rough Laplacian, weighted
    double gradf_h11 = 0, gradf_h22 = 0;           // radial transport term
    double rm_h33 = 0;                             // curvature action
    double div1 = 0, div2 = 0;                     // weighted divergence
    double om11 = 0, om12 = 0, om22 = 0, om33 = 0;
    double hess_u11 = 0, hess_u12 = 0, hess_u22 = 0, hess_u33 = 0;
    double u = 0;  // trace h + 2 v
    double B = 0;  // reduced scalar operator in (v, h1, h2) form
};

struct AssembledE {
    double e11 = 0, e12 = 0, e22 = 0, e33 = 0;  // tensor assembly
    double e12_direct = 0, e33_direct = 0;      // short direct displays
    LinearizedTensors parts;
};

struct HPair {
    double h11 = 0, h22 = 0;
};

struct AOdeResiduals {
    double ode1 = 0, ode2 = 0, diff = 0;
};

struct DeltaK {
    double dk12 = 0, dk23 = 0, dk13 = 0;
};

// VariationField -> perturbation component values.
HPair h_from_V(const VariationField& f, double r, double x);

// Perturbation components from (v, A) via the closed-form solutions of the
// off-diagonal and angular equations.
PerturbationComponents pc_from_vA(ScalarField2 v, ScalarField1 A);
// v = (4 - r^2) V, A = 0.
PerturbationComponents pc_from_V(const VariationField& f);

ScalarField1 zero_profile();

// The reduced second-order scalar operator acting on V.
double E_of_V(const VariationField& f, double r, double x);
// Value and radial derivative of E at (r, x); needs order-3 jets of V.
Dual E_of_V_dual(const VariationField& f, double r, double x);

// The scalar operator B acting on (v, A).
double B_of(const ScalarField2& v, const ScalarField1& A, double r, double x);

// Assemble the linearized system from its intermediate tensors, and evaluate
// the short direct displays for the off-diagonal and angular components.
AssembledE assemble_Eij(const PerturbationComponents& pc, double r, double x);

// Long direct displays for the diagonal components, in terms of (v, A).
void direct_E11_E22(const ScalarField2& v, const ScalarField1& A, double r, double x,
                    double* e11, double* e22);

// Same displays evaluated on explicitly supplied derivative slots (used by the
// elimination check, which substitutes the radial second derivative).
struct VSlots {
    double v = 0, vr = 0, vrr = 0, vrrr = 0;
    double vxx = 0, vrxx = 0, vrx = 0;
};
void direct_E11_E22_slots(const VSlots& s, const Jet1& A, double r, double* e11, double* e22);

// Residuals of the two radial gauge ODEs and of their first-order difference.
AOdeResiduals a_ode_check(const ScalarField1& A, double r);

// First variations of the three coordinate-plane sectional curvatures.
DeltaK delta_sectional(const VariationField& f, double r, double x);

void require_r_interior(double r);

}  // namespace cigarlab
