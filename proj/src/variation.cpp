#include "cigarlab/variation.hpp"

#include <cmath>
#include <utility>

namespace cigarlab {

void require_r_interior(double r) {
    if (!(r > 0.0 && r < 2.0)) throw DomainError("radial coordinate must lie in (0, 2)");
}

HPair h_from_V(const VariationField& f, double r, double x) {
    require_r_interior(r);
    const Jet2 V = f.V(r, x);
    const double w = 4.0 - r * r, p = 4.0 + r * r;
    HPair h;
    h.h11 = 32.0 * r / p * V.d1 - 64.0 * r * r / (16.0 - r * r * r * r) * V.v;
    h.h22 = 2.0 * r * w * w / p * V.d1 - 2.0 * w * (4.0 + 3.0 * r * r) / p * V.v;
    return h;
}

ScalarField1 zero_profile() {
    return [](double) { return Jet1::constant(0.0); };
}

PerturbationComponents pc_from_vA(ScalarField2 v, ScalarField1 A) {
    PerturbationComponents pc;
    pc.v = v;
    pc.A = A;
    // h1 = 32 r / (16 - r^4) v_r + A.  Jets exact through order two, which is
    // all the assembly consumes.
    pc.h1 = [v, A](double r, double x) {
        require_r_interior(r);
        const Jet2 rj = Jet2::variable(1, r);
        const Jet2 vj = v(r, x);
        return 32.0 * rj / (16.0 - rj * rj * rj * rj) * d_axis(vj, 1) + lift(A(r), 1);
    };
    // h2 = 2 r (4 - r^2)/(4 + r^2) v_r - 2 v + (4 - r^2)^2/16 A.
    pc.h2 = [v, A](double r, double x) {
        require_r_interior(r);
        const Jet2 rj = Jet2::variable(1, r);
        const Jet2 vj = v(r, x);
        const Jet2 w = 4.0 - rj * rj;
        return 2.0 * rj * w / (4.0 + rj * rj) * d_axis(vj, 1) - 2.0 * vj + w * w / 16.0 * lift(A(r), 1);
    };
    return pc;
}

PerturbationComponents pc_from_V(const VariationField& f) {
    ScalarField2 V = f.V;
    ScalarField2 v = [V](double r, double x) {
        const Jet2 rj = Jet2::variable(1, r);
        return (4.0 - rj * rj) * V(r, x);
    };
    return pc_from_vA(std::move(v), zero_profile());
}

double E_of_V(const VariationField& f, double r, double x) {
    require_r_interior(r);
    const Jet2 V = f.V(r, x);
    const double w = 4.0 - r * r, r2 = r * r, r4 = r2 * r2;
    return (r2 + 4.0) * (w * w * V.d11 + 16.0 * V.d22)
         - (5.0 * r4 + 48.0 * r2 - 16.0) * w * V.d1 / r
         + 4.0 * (r4 + 16.0 * r2 - 16.0) * V.v;
}

Dual E_of_V_dual(const VariationField& f, double r, double x) {
    require_r_interior(r);
    const Jet2 V = f.V(r, x);
    const Dual R{r, 1.0};
    const Dual Vv{V.v, V.d1}, Vr{V.d1, V.d11}, Vrr{V.d11, V.d111}, Vxx{V.d22, V.d122};
    const Dual w = 4.0 - R * R;
    const Dual r2 = R * R, r4 = r2 * r2;
    return (r2 + 4.0) * (w * w * Vrr + 16.0 * Vxx)
         - (5.0 * r4 + 48.0 * r2 - 16.0) * w * Vr / R
         + 4.0 * (r4 + 16.0 * r2 - 16.0) * Vv;
}

double B_of(const ScalarField2& v, const ScalarField1& A, double r, double x) {
    require_r_interior(r);
    const Jet2 vj = v(r, x);
    const double Av = A(r).v;
    const double w = 4.0 - r * r, r2 = r * r, r4 = r2 * r2;
    return w * w / 16.0 * vj.d11 + vj.d22
         - w * (r4 + 32.0 * r2 - 16.0) / (16.0 * r * (4.0 + r2)) * vj.d1
         - w * w / 16.0 * Av;
}

AssembledE assemble_Eij(const PerturbationComponents& pc, double r, double x) {
    require_r_interior(r);
    const Jet2 H1 = pc.h1(r, x);
    const Jet2 H2 = pc.h2(r, x);
    const Jet2 vj = pc.v(r, x);
    const double w = 4.0 - r * r, r2 = r * r, r4 = r2 * r2;
    const double w2 = w * w, w3 = w2 * w, w4 = w3 * w;

    LinearizedTensors t;
    t.lap_h11 = w2 / 16.0 * H1.d11 + H1.d22 + w * (4.0 - 11.0 * r2) / (16.0 * r) * H1.d1
              + (11.0 * r4 - 8.0 * r2 - 16.0) / (8.0 * r2) * H1.v;
    t.lap_h22 = w2 / 16.0 * H2.d11 + H2.d22 + w * (4.0 - 3.0 * r2) / (16.0 * r) * H2.d1;
    t.lap_h33 = w4 / 128.0 * H1.v;
    t.gradf_h11 = r * w / 8.0 * H1.d1 - r2 / 2.0 * H1.v;
    t.gradf_h22 = r * w / 8.0 * H2.d1;
    t.rm_h33 = r2 * w3 / 128.0 * H1.v;
    t.div1 = w2 / 16.0 * H1.d1 + w * (4.0 - 3.0 * r2) / (16.0 * r) * H1.v;
    t.div2 = H2.d2;
    t.om11 = -w2 / 16.0 * H1.d11 - w * (4.0 - 9.0 * r2) / (16.0 * r) * H1.d1
           + (-15.0 * r4 + 24.0 * r2 + 16.0) / (16.0 * r2) * H1.v;
    t.om12 = -w2 / 32.0 * H1.d12 - w * (4.0 - 3.0 * r2) / (32.0 * r) * H1.d2 - 0.5 * H2.d12;
    t.om22 = -H2.d22;
    t.om33 = -r * w4 / 256.0 * H1.d1 - w3 * (4.0 - 3.0 * r2) / 256.0 * H1.v;

    const Jet2 rj = Jet2::variable(1, r);
    const Jet2 wj = 4.0 - rj * rj;
    const Jet2 uj = wj * wj / 16.0 * H1 + H2 + 2.0 * vj;
    t.u = uj.v;
    t.hess_u11 = uj.d11 - 2.0 * r / w * uj.d1;
    t.hess_u12 = uj.d12;
    t.hess_u22 = uj.d22;
    t.hess_u33 = r * w2 / 16.0 * uj.d1;

    t.B = w2 / 16.0 * vj.d11 + vj.d22 + (16.0 - r4) / (16.0 * r) * vj.d1
        - r * w3 / 256.0 * H1.d1 + r * w / 16.0 * H2.d1 - w3 / 64.0 * H1.v;

    AssembledE out;
    out.parts = t;
    out.e11 = t.lap_h11 + t.gradf_h11 + 2.0 * t.om11 + t.hess_u11;
    out.e12 = 2.0 * t.om12 + t.hess_u12;
    out.e22 = t.lap_h22 + t.gradf_h22 + 2.0 * t.om22 + t.hess_u22;
    out.e33 = t.lap_h33 + 2.0 * t.rm_h33 + 2.0 * t.om33 + t.hess_u33;

    out.e12_direct = 2.0 * vj.d12 + (r4 - 16.0) / (16.0 * r) * H1.d2;
    out.e33_direct = r * w2 / 8.0 * vj.d1 + r * w2 / 16.0 * H2.d1
                   - r * w4 / 256.0 * H1.d1 + r2 * w3 / 64.0 * H1.v;
    return out;
}

void direct_E11_E22_slots(const VSlots& s, const Jet1& A, double r, double* e11, double* e22) {
    require_r_interior(r);
    const double w = 4.0 - r * r, p = 4.0 + r * r;
    const double r2 = r * r, r4 = r2 * r2, r6 = r4 * r2, r8 = r4 * r4;
    const double w2 = w * w, w3 = w2 * w, w4 = w3 * w;
    const double p2 = p * p, p3 = p2 * p;
    if (e11) {
        *e11 = 2.0 * r * w / p * s.vrrr + 32.0 * r / (16.0 - r4) * s.vrxx
             - 2.0 * (5.0 * r4 + 48.0 * r2 - 16.0) / p2 * s.vrr
             + 2.0 * (3.0 * r8 + 48.0 * r6 + 480.0 * r4 - 768.0 * r2 - 256.0) / (r * w * p3) * s.vr
             + w2 / 16.0 * A.d2 - w * (4.0 + 11.0 * r2) / (16.0 * r) * A.d1 + 1.5 * r2 * A.v;
    }
    if (e22) {
        *e22 = r * w3 / (8.0 * p) * s.vrrr + 2.0 * r * w / p * s.vrxx
             - w2 * (r4 + 10.0 * r2 - 8.0) / (2.0 * p2) * s.vrr + 2.0 * s.vxx
             - r * w2 * (r2 + 4.0 * r + 12.0) * (r2 - 4.0 * r + 12.0) / (4.0 * p3) * s.vr
             + w4 / 256.0 * A.d2 + w3 * (4.0 - 9.0 * r2) / (256.0 * r) * A.d1
             + w2 * (r2 - 2.0) / 16.0 * A.v;
    }
}

void direct_E11_E22(const ScalarField2& v, const ScalarField1& A, double r, double x,
                    double* e11, double* e22) {
    const Jet2 vj = v(r, x);
    VSlots s;
    s.v = vj.v;
    s.vr = vj.d1;
    s.vrr = vj.d11;
    s.vrrr = vj.d111;
    s.vxx = vj.d22;
    s.vrxx = vj.d122;
    s.vrx = vj.d12;
    direct_E11_E22_slots(s, A(r), r, e11, e22);
}

AOdeResiduals a_ode_check(const ScalarField1& A, double r) {
    require_r_interior(r);
    const Jet1 a = A(r);
    const double r2 = r * r, r4 = r2 * r2, w = 4.0 - r2, p = 4.0 + r2;
    AOdeResiduals out;
    out.ode1 = a.d2 - (11.0 * r4 + 16.0 * r2 + 16.0) / (r * (16.0 - r4)) * a.d1
             - 8.0 * r2 * (4.0 - 3.0 * r2) / (w * w * p) * a.v;
    out.ode2 = a.d2 + (16.0 - 9.0 * r4) / (r * (16.0 - r4)) * a.d1 - 16.0 * r2 / (16.0 - r4) * a.v;
    out.diff = (16.0 - r4) * a.d1 - 4.0 * r2 * r * a.v;
    return out;
}

DeltaK delta_sectional(const VariationField& f, double r, double x) {
    require_r_interior(r);
    const Jet2 V = f.V(r, x);
    const double w = 4.0 - r * r, p = 4.0 + r * r;
    const double r2 = r * r, r4 = r2 * r2, w2 = w * w, w3 = w2 * w;
    DeltaK k;
    k.dk12 = w3 / (16.0 * p) * (2.0 * V.v - w * V.d1 / r);
    k.dk23 = w2 / (16.0 * p) * (-w2 * V.d11 + 2.0 * r2 * w * (3.0 * r2 + 20.0) / p * V.d1 / r
                                - 2.0 * (3.0 * r4 + 24.0 * r2 - 16.0) / p * V.v);
    k.dk13 = w2 / (16.0 * p) * (w2 * V.d11 - w * (9.0 * r4 + 48.0 * r2 - 16.0) / p * V.d1 / r
                                + 4.0 * (3.0 * r4 + 16.0 * r2 - 16.0) / p * V.v);
    return k;
}

}  // namespace cigarlab
