#pragma once

#include "cigarlab/jets.hpp"
#include "cigarlab/variation.hpp"

namespace cigarlab {

// Coordinate pair under the half-strip substitution xi = log(2+r) - log(2-r).
struct TransformPair {
    double xi = 0;
    double r = 0;
};

// Scalar field on the half-strip (xi, x), xi > 0.
struct WField {
    ScalarField2 W;
};

struct SlackRecord {
    double slack = 0;       // W_xi - m(xi) W
    double crosscheck = 0;  // curvature-variation cross-check (when V supplied)
    bool has_crosscheck = false;
};

struct RemarkRecord {
    double lhs = 0, rhs = 0, residual = 0;
};

struct EndgameRecord {
    bool gauge_pass = false;
    double contradiction_value = 0;     // E on the log solution
    double contradiction_residual = 0;  // |value - closed form|
};

double xi_of_r(double r);
double r_of_xi(double xi);
TransformPair pair_from_r(double r);
TransformPair pair_from_xi(double xi);
// Order-3 jet of r(xi) = 2 tanh(xi/2).
Jet1 r_of_xi_jet(double xi);

// Zeroth-order coefficients of the two transformed stationary equations.
double Q_coeff(double xi);
double P_coeff(double xi);

// Multiplier turning V into Y, in both coordinate presentations, and the
// proportionality factor lambda tying the Y-residual back to E(V).
double multiplier_r(double r);
double multiplier_xi(double xi);
double lambda_r(double r);

// Y(xi, x) with exact jets obtained by chain rule through r(xi).
ScalarField2 Y_from_V(const VariationField& f);

// Pointwise residual of Y_xixi + Y_xx - Q Y and of W_xixi + W_xx - P W.
double Y_residual(const ScalarField2& Y, double xi, double x);
double W_residual(const WField& W, double xi, double x);

// First-order reduction W = -Y_xi - c(xi) Y, and its (r, V) presentation.
double W_from_Y(const ScalarField2& Y, double xi, double x);
double W_from_V(const VariationField& f, double r, double x);
// W as a field with jets exact through order two.
WField W_field_from_Y(ScalarField2 Y);

// Explicit positive solution of W_xixi - P W = 0 with W(0) = 0.
double w0_kernel(double xi);
WField w0_field();

// Left side of the monotonicity inequality; with a variation field supplied,
// also evaluates the independent curvature-variation form of the same
// quantity (the two agree up to a fixed constant ratio).
SlackRecord inequality_slack(const WField& W, double xi, double x);
SlackRecord inequality_slack(const VariationField& f, double xi, double x);

// First variations of the coordinate-plane sectional curvatures, half-strip
// presentation, evaluated from the Y field.
DeltaK delta_sectional_xi(const ScalarField2& Y, double xi, double x);

// The differential identity relating L(W) = W_xixi + W_xx - P W to the radial
// derivative of E(V).  Needs order-3 jets of V.
RemarkRecord remark_identity(const VariationField& f, double r, double x);

// Endgame checks: the pure-gauge branch produces h11 = 0, h22 = -2A and
// W = 0, while the log solution has nonvanishing E with a known closed form.
EndgameRecord theorem_endgame(double r, double x);

// Named variation fields.
VariationField gauge_variation(ScalarField1 A_of_x);  // A(x) / (4 - r^2)
VariationField v_log_field();
VariationField v_dagger_field(double c0);

void require_xi_positive(double xi);
void require_xi_interior(double xi);  // field evaluations capped at xi >= 1e-3

}  // namespace cigarlab
