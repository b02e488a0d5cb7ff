#include "cigarlab/models.hpp"

#include <cmath>

namespace cigarlab {

namespace {

ScalarField2 const_in_x(std::function<Jet2(const Jet2&)> f) {
    return [f](double c1, double /*c2*/) { return f(Jet2::variable(1, c1)); };
}

}  // namespace

MetricModel cigar3d() {
    MetricModel m;
    m.dim = 3;
    m.axes = {"r", "x", "theta"};
    m.active = {0, 1};
    m.name = "cigar3d";
    m.lo1 = 0.0;
    m.hi1 = 2.0;
    m.components = [](double r, double /*x*/) {
        const Jet2 rj = Jet2::variable(1, r);
        const Jet2 w = 4.0 - rj * rj;
        MetricJets g;
        g.g[0][0] = 16.0 / (w * w);
        g.g[1][1] = Jet2::constant(1.0);
        g.g[2][2] = rj * rj;
        return g;
    };
    m.potential = [](double r, double /*x*/) {
        const Jet2 rj = Jet2::variable(1, r);
        return -log(4.0 - rj * rj);
    };
    m.has_potential = true;
    m.oracles["Gamma_r_rr"] = const_in_x([](const Jet2& r) { return 2.0 * r / (4.0 - r * r); });
    m.oracles["Gamma_r_thth"] = const_in_x([](const Jet2& r) {
        const Jet2 w = 4.0 - r * r;
        return -r * w * w / 16.0;
    });
    m.oracles["Gamma_th_rth"] = const_in_x([](const Jet2& r) { return recip(r); });
    m.oracles["R_rthrth"] = const_in_x([](const Jet2& r) { return 2.0 * r * r / (4.0 - r * r); });
    return m;
}

MetricModel cigar2d() {
    MetricModel m;
    m.dim = 2;
    m.axes = {"r", "theta", ""};
    m.active = {0, 1};
    m.name = "cigar2d";
    m.lo1 = 0.0;
    m.hi1 = 2.0;
    m.components = [](double r, double /*th*/) {
        const Jet2 rj = Jet2::variable(1, r);
        const Jet2 w = 4.0 - rj * rj;
        MetricJets g;
        g.g[0][0] = 16.0 / (w * w);
        g.g[1][1] = rj * rj;
        return g;
    };
    m.potential = [](double r, double /*th*/) {
        const Jet2 rj = Jet2::variable(1, r);
        return -log(4.0 - rj * rj);
    };
    m.has_potential = true;
    m.oracles["gauss"] = const_in_x([](const Jet2& r) { return (4.0 - r * r) / 8.0; });
    return m;
}

MetricModel sigma_surface() {
    MetricModel m;
    m.dim = 2;
    m.axes = {"x", "xi", ""};
    m.active = {0, 1};
    m.name = "sigma";
    m.lo2 = 0.0;  // xi > 0
    m.components = [](double /*x*/, double xi) {
        if (xi <= 0.0) throw DomainError("sigma: xi must be positive");
        const Jet2 e2 = exp(2.0 * Jet2::variable(2, xi));
        const Jet2 P = (e2 * e2 + 10.0 * e2 + 1.0) / (4.0 * (e2 - 1.0) * (e2 - 1.0));
        MetricJets g;
        g.g[0][0] = P;
        g.g[1][1] = P;
        return g;
    };
    return m;
}

MetricModel euclidean3() {
    MetricModel m;
    m.dim = 3;
    m.axes = {"x", "y", "z"};
    m.active = {0, 1};
    m.name = "euclidean3";
    m.components = [](double, double) {
        MetricJets g;
        g.g[0][0] = Jet2::constant(1.0);
        g.g[1][1] = Jet2::constant(1.0);
        g.g[2][2] = Jet2::constant(1.0);
        return g;
    };
    m.potential = [](double, double) { return Jet2{}; };
    m.has_potential = true;
    return m;
}

MetricModel appendix_metric(const KillingMetricSpec& s) {
    MetricModel m;
    m.dim = 3;
    m.axes = {"t", "x", "y"};
    m.active = {1, 2};  // (x, y)
    m.name = s.name;
    m.lo2 = s.y_lo;
    m.hi2 = s.y_hi;
    m.components = [s](double x, double y) {
        const Jet2 yj = Jet2::variable(2, y);
        const Jet2 q = lift(s.q(y), 2);
        const Jet2 p = lift(s.p(y), 2);
        const Jet2 Om = lift(s.Omega(y), 2);
        const Jet2 tau = lift(s.tau(x), 1);
        const Jet2 y2 = yj * yj;
        const Jet2 qt = q - tau;
        MetricJets g;
        g.g[0][0] = y2;
        g.g[0][1] = y2 * qt;
        g.g[1][0] = g.g[0][1];
        g.g[1][1] = y2 * qt * qt + p * p;
        g.g[2][2] = Om * Om;
        return g;
    };
    m.potential = [s](double /*x*/, double y) { return lift(s.f(y), 2); };
    m.has_potential = true;
    return m;
}

AppendixHessian appendix_hessian_closed(const KillingMetricSpec& s, double x, double y) {
    if (y <= 0.0) throw DomainError("appendix_hessian_closed: y must be positive");
    const Jet1 p = s.p(y), q = s.q(y), Om = s.Omega(y), f = s.f(y);
    const double tau = s.tau(x).v;
    const double Om2 = Om.v * Om.v;
    AppendixHessian h;
    h.f11 = y * f.d1 / Om2;
    h.f12 = y * f.d1 / (2.0 * Om2) * (2.0 * q.v - 2.0 * tau + y * q.d1);
    h.f22 = f.d1 / Om2 *
            (y * tau * tau - (y * y * q.d1 + 2.0 * y * q.v) * tau + y * q.v * q.v +
             y * y * q.v * q.d1 + p.v * p.d1);
    h.f33 = f.d2 - f.d1 * Om.d1 / Om.v;
    h.det2 = h.f11 * h.f22 - h.f12 * h.f12;
    h.D = y * y * y * y * q.d1 * q.d1 - 4.0 * y * p.v * p.d1;
    const double qt = q.v - tau;
    h.wedge2 = y * y * (y * y * qt * qt + p.v * p.v) - (y * y * qt) * (y * y * qt);
    h.k12 = h.D / (4.0 * Om2 * h.wedge2);
    return h;
}

double rigidity_obstruction(const KillingMetricSpec& s, double x, double y) {
    const AppendixHessian h = appendix_hessian_closed(s, x, y);
    return h.det2 * h.k12;
}

KillingMetricSpec appendix_demo_spec() {
    KillingMetricSpec s;
    s.p = [](double y) { return cosh(Jet1::variable(y)); };
    s.q = [](double y) {
        const Jet1 j = Jet1::variable(y);
        return j * j;
    };
    s.Omega = [](double) { return Jet1::constant(1.0); };
    s.f = [](double y) {
        const Jet1 j = Jet1::variable(y);
        return j * j;
    };
    s.tau = [](double x) { return sin(Jet1::variable(x)); };
    s.y_lo = 0.5;
    s.y_hi = 3.0;
    s.name = "appendix-demo";
    return s;
}

KillingMetricSpec appendix_flat_spec() {
    KillingMetricSpec s;
    s.p = [](double y) { return Jet1::variable(y); };
    s.q = [](double) { return Jet1::constant(0.0); };
    s.Omega = [](double) { return Jet1::constant(1.0); };
    s.f = [](double y) { return Jet1::variable(y); };
    s.tau = [](double) { return Jet1::constant(0.0); };
    s.y_lo = 0.1;
    s.y_hi = 10.0;
    s.name = "appendix-flat";
    return s;
}

MetricModel model_by_name(const std::string& id) {
    if (id == "cigar2d") return cigar2d();
    if (id == "cigar3d") return cigar3d();
    if (id == "sigma") return sigma_surface();
    if (id == "appendix-demo") return appendix_metric(appendix_demo_spec());
    throw DomainError("unknown model id: " + id);
}

}  // namespace cigarlab
