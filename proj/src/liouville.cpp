#include "cigarlab/liouville.hpp"

#include <cmath>
#include <utility>

namespace cigarlab {

void require_xi_positive(double xi) {
    if (!(xi > 0.0)) throw DomainError("strip coordinate must be positive");
}

void require_xi_interior(double xi) {
    // Coefficients blow up like xi^-2 at the wall; evaluate fields at
    // xi >= 1e-3 and treat wall claims as asymptotic rates.
    if (!(xi >= 1e-3)) throw DomainError("strip coordinate below evaluation cap 1e-3");
}

double xi_of_r(double r) {
    if (!(r >= 0.0 && r < 2.0)) throw DomainError("radial coordinate must lie in [0, 2)");
    return std::log(2.0 + r) - std::log(2.0 - r);
}

double r_of_xi(double xi) {
    if (!(xi >= 0.0)) throw DomainError("strip coordinate must be nonnegative");
    return 2.0 * std::tanh(0.5 * xi);
}

TransformPair pair_from_r(double r) { return TransformPair{xi_of_r(r), r}; }
TransformPair pair_from_xi(double xi) { return TransformPair{xi, r_of_xi(xi)}; }

Jet1 r_of_xi_jet(double xi) {
    if (!(xi >= 0.0)) throw DomainError("strip coordinate must be nonnegative");
    const double r = 2.0 * std::tanh(0.5 * xi);
    const double w = 4.0 - r * r;
    Jet1 s;
    s.v = r;
    s.d1 = w / 4.0;
    s.d2 = -r * w / 8.0;
    s.d3 = w * (3.0 * r * r - 4.0) / 32.0;
    return s;
}

namespace {

// exp(k xi) for the rational-exponential coefficient displays.
inline double ek(double xi, int k) { return std::exp(k * xi); }

inline double c12_coeff(double xi) {
    const double e2 = ek(xi, 2), e4 = ek(xi, 4);
    return (e4 - 6.0 * e2 + 1.0) / (2.0 * (e4 - 1.0));
}

inline double slack_m(double xi) {
    const double e2 = ek(xi, 2);
    return (e2 + 1.0) / (2.0 * (e2 - 1.0));
}

inline Jet1 c12_jet(double xi) {
    const Jet1 t = Jet1::variable(xi);
    const Jet1 e2 = exp(2.0 * t), e4 = exp(4.0 * t);
    return (e4 - 6.0 * e2 + 1.0) / (2.0 * (e4 - 1.0));
}

}  // namespace

double Q_coeff(double xi) {
    require_xi_positive(xi);
    const double e2 = ek(xi, 2), e4 = ek(xi, 4), e6 = ek(xi, 6), e8 = ek(xi, 8);
    const double den = e4 - 1.0;
    return (e8 - 36.0 * e6 + 54.0 * e4 - 36.0 * e2 + 1.0) / (4.0 * den * den);
}

double P_coeff(double xi) {
    require_xi_positive(xi);
    const double e2 = ek(xi, 2), e4 = ek(xi, 4);
    const double den = e2 - 1.0;
    return (e4 + 10.0 * e2 + 1.0) / (4.0 * den * den);
}

double multiplier_r(double r) {
    require_r_interior(r);
    const double w = 4.0 - r * r;
    return 2.0 * w * std::sqrt(r * w) / (4.0 + r * r);
}

double multiplier_xi(double xi) {
    require_xi_positive(xi);
    const double e1 = ek(xi, 1), e2 = ek(xi, 2);
    return 16.0 * std::sqrt(2.0) * std::exp(1.5 * xi) * std::sqrt(e1 - 1.0)
         / (std::pow(e1 + 1.0, 1.5) * (e2 + 1.0));
}

double lambda_r(double r) {
    require_r_interior(r);
    const double w = 4.0 - r * r, p = 4.0 + r * r;
    return w * std::sqrt(r * w) / (8.0 * p * p);
}

ScalarField2 Y_from_V(const VariationField& f) {
    ScalarField2 V = f.V;
    return [V](double xi, double x) {
        require_xi_interior(xi);
        const Jet1 s = r_of_xi_jet(xi);
        const Jet2 rj = Jet2::variable(1, s.v);
        const Jet2 w = 4.0 - rj * rj;
        const Jet2 mu = 2.0 * w * sqrt(rj * w) / (4.0 + rj * rj);
        const Jet2 Yr = mu * V(s.v, x);
        return reparam1(Yr, s);
    };
}

double Y_residual(const ScalarField2& Y, double xi, double x) {
    require_xi_interior(xi);
    const Jet2 y = Y(xi, x);
    return y.d11 + y.d22 - Q_coeff(xi) * y.v;
}

double W_residual(const WField& W, double xi, double x) {
    require_xi_interior(xi);
    const Jet2 w = W.W(xi, x);
    return w.d11 + w.d22 - P_coeff(xi) * w.v;
}

double W_from_Y(const ScalarField2& Y, double xi, double x) {
    require_xi_interior(xi);
    const Jet2 y = Y(xi, x);
    return -y.d1 - c12_coeff(xi) * y.v;
}

double W_from_V(const VariationField& f, double r, double x) {
    require_r_interior(r);
    const Jet2 V = f.V(r, x);
    const double w = 4.0 - r * r;
    return std::sqrt(r) * std::pow(w, 1.5) / (2.0 * (4.0 + r * r))
         * (2.0 * r * V.v - w * V.d1);
}

WField W_field_from_Y(ScalarField2 Y) {
    WField out;
    out.W = [Y = std::move(Y)](double xi, double x) {
        require_xi_interior(xi);
        const Jet2 y = Y(xi, x);
        // Exact through order two; third-order slots of d_axis are zero.
        return -d_axis(y, 1) - lift(c12_jet(xi), 1) * y;
    };
    return out;
}

double w0_kernel(double xi) {
    require_xi_positive(xi);
    const double e1 = ek(xi, 1), e2 = ek(xi, 2);
    return (e1 - 1.0) * (e1 - 1.0) / (std::exp(0.5 * xi) * std::sqrt(e2 - 1.0));
}

WField w0_field() {
    WField out;
    out.W = [](double xi, double x) {
        (void)x;
        require_xi_interior(xi);
        const Jet2 t = Jet2::variable(1, xi);
        const Jet2 e1 = exp(t), e2 = exp(2.0 * t);
        return (e1 - 1.0) * (e1 - 1.0) / (exp(0.5 * t) * sqrt(e2 - 1.0));
    };
    return out;
}

SlackRecord inequality_slack(const WField& W, double xi, double x) {
    require_xi_interior(xi);
    const Jet2 w = W.W(xi, x);
    SlackRecord rec;
    rec.slack = w.d1 - slack_m(xi) * w.v;
    return rec;
}

SlackRecord inequality_slack(const VariationField& f, double xi, double x) {
    require_xi_interior(xi);
    const WField W = W_field_from_Y(Y_from_V(f));
    SlackRecord rec = inequality_slack(W, xi, x);
    const double r = r_of_xi(xi);
    const DeltaK k = delta_sectional(f, r, x);
    rec.crosscheck = 2.0 * std::sqrt(2.0) * std::exp(-0.5 * xi)
                   * std::sqrt(ek(xi, 2) - 1.0) * k.dk23;
    rec.has_crosscheck = true;
    return rec;
}

DeltaK delta_sectional_xi(const ScalarField2& Y, double xi, double x) {
    require_xi_interior(xi);
    const Jet2 y = Y(xi, x);
    const double e1 = ek(xi, 1), e2 = ek(xi, 2), e3 = ek(xi, 3), e4 = ek(xi, 4);
    const double e5 = ek(xi, 5), e6 = ek(xi, 6), e7 = ek(xi, 7), e8 = ek(xi, 8);
    const double den4 = (e4 - 1.0) * (e4 - 1.0);
    const double pre1 = std::sqrt(2.0) * std::exp(0.5 * xi) / std::sqrt(e2 - 1.0);
    const double pre12 = 2.0 * std::sqrt(2.0) * std::exp(1.5 * xi) / std::pow(e2 - 1.0, 1.5);
    const double mu23 = 4.0 * e2 / (e4 - 1.0);
    const double q23 = (e8 - 28.0 * e6 + 6.0 * e4 - 28.0 * e2 + 1.0) / (4.0 * den4);
    const double c13 = (e1 - 1.0) * (e1 - 1.0) * (e1 - 1.0) / ((e1 + 1.0) * (e2 + 1.0));
    const double q13 = (3.0 * e8 - 8.0 * e7 - 36.0 * e6 + 40.0 * e5 - 14.0 * e4
                        + 40.0 * e3 - 36.0 * e2 - 8.0 * e1 + 3.0) / (4.0 * den4);
    DeltaK k;
    k.dk12 = pre12 * (-y.d1 - c12_coeff(xi) * y.v);
    k.dk23 = pre1 * (-y.d11 + mu23 * y.d1 + q23 * y.v);
    k.dk13 = pre1 * (y.d11 - c13 * y.d1 - q13 * y.v);
    return k;
}

RemarkRecord remark_identity(const VariationField& f, double r, double x) {
    require_r_interior(r);
    const double xi = xi_of_r(r);
    const WField W = W_field_from_Y(Y_from_V(f));
    const Jet2 w = W.W(xi, x);
    const double L = w.d11 + w.d22 - P_coeff(xi) * w.v;
    const double wr = 4.0 - r * r, p = 4.0 + r * r;
    RemarkRecord rec;
    rec.lhs = -32.0 * p * p / (std::sqrt(r) * std::pow(wr, 2.5)) * L;
    const Dual e = E_of_V_dual(f, r, x);
    rec.rhs = e.d - 16.0 * r / (16.0 - r * r * r * r) * e.v;
    rec.residual = std::abs(rec.lhs - rec.rhs);
    return rec;
}

VariationField gauge_variation(ScalarField1 A_of_x) {
    VariationField f;
    f.V = [A = std::move(A_of_x)](double r, double x) {
        require_r_interior(r);
        const Jet2 rj = Jet2::variable(1, r);
        return lift(A(x), 2) / (4.0 - rj * rj);
    };
    return f;
}

VariationField v_log_field() {
    VariationField f;
    f.V = [](double r, double x) {
        (void)x;
        require_r_interior(r);
        const Jet2 rj = Jet2::variable(1, r);
        const Jet2 w = 4.0 - rj * rj;
        const double s2 = std::sqrt(2.0);
        return -8.0 * s2 / (w * w) - s2 * log(w) / w;
    };
    return f;
}

VariationField v_dagger_field(double c0) {
    VariationField f;
    f.V = [c0](double r, double x) {
        (void)x;
        require_r_interior(r);
        const Jet2 rj = Jet2::variable(1, r);
        const Jet2 w = 4.0 - rj * rj;
        return (log(rj) + 8.0 / w + c0) / w;
    };
    return f;
}

EndgameRecord theorem_endgame(double r, double x) {
    require_r_interior(r);
    EndgameRecord rec;
    // Pure-gauge branch with constant profile A = 1.
    const VariationField vg = gauge_variation([](double) { return Jet1::constant(1.0); });
    const HPair h = h_from_V(vg, r, x);
    const double wg = W_from_V(vg, r, x);
    rec.gauge_pass = std::abs(h.h11) <= 1e-12 && std::abs(h.h22 + 2.0) <= 1e-12
                  && std::abs(wg) <= 1e-12;
    // Log-solution branch: E stays bounded away from zero.
    const VariationField vl = v_log_field();
    rec.contradiction_value = E_of_V(vl, r, x);
    const double closed = -16.0 * std::sqrt(2.0) * (4.0 + r * r) / (4.0 - r * r);
    rec.contradiction_residual = std::abs(rec.contradiction_value - closed);
    return rec;
}

}  // namespace cigarlab
