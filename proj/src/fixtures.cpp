#include "cigarlab/fixtures.hpp"

namespace cigarlab {

namespace {

double uni(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace

VariationField random_variation(std::mt19937_64& rng, bool even_in_r) {
    std::vector<double> c(9), den(3);
    for (auto& v : c) v = uni(rng, -1.0, 1.0);
    for (auto& v : den) v = uni(rng, 1.0, 3.0);
    const double w1 = uni(rng, 0.3, 1.2), w2 = uni(rng, 0.3, 1.2);
    const double p1 = uni(rng, 0.0, 3.0), p2 = uni(rng, 0.0, 3.0);
    VariationField f;
    f.V = [c, den, w1, w2, p1, p2, even_in_r](double r, double x) {
        const Jet2 rj = Jet2::variable(1, r);
        const Jet2 xj = Jet2::variable(2, x);
        const Jet2 rho = even_in_r ? rj * rj : rj;
        auto rad = [&](int k) {
            return (c[3 * k] + c[3 * k + 1] * rho + c[3 * k + 2] * rho * rho)
                 / (den[k] + rj * rj);
        };
        return rad(0) + rad(1) * sin(w1 * xj + p1) + rad(2) * cos(w2 * xj + p2);
    };
    return f;
}

ScalarField1 random_affine_profile(std::mt19937_64& rng) {
    const double a = uni(rng, -1.0, 1.0), b = uni(rng, -1.0, 1.0);
    return [a, b](double x) { return a + b * Jet1::variable(x); };
}

ScalarField1 random_curved_profile(std::mt19937_64& rng) {
    const double a = uni(rng, -1.0, 1.0), b = uni(rng, -1.0, 1.0);
    const double q = uni(rng, -1.0, 1.0), s = uni(rng, -1.0, 1.0);
    const double w = uni(rng, 0.3, 1.2), ph = uni(rng, 0.0, 3.0);
    return [a, b, q, s, w, ph](double x) {
        const Jet1 xj = Jet1::variable(x);
        return a + b * xj + q * xj * xj + s * sin(w * xj + ph);
    };
}

ScalarField1 random_radial_profile(std::mt19937_64& rng) {
    const double a = uni(rng, -1.0, 1.0), b = uni(rng, -1.0, 1.0);
    const double q = uni(rng, -1.0, 1.0), s = uni(rng, -1.0, 1.0);
    const double d = uni(rng, 1.0, 3.0);
    return [a, b, q, s, d](double r) {
        const Jet1 rj = Jet1::variable(r);
        return a + b * rj * rj + q * rj * rj * rj + s / (d + rj * rj);
    };
}

ScalarField2 random_strip_scalar(std::mt19937_64& rng) {
    std::vector<double> c(6), den(2);
    for (auto& v : c) v = uni(rng, -1.0, 1.0);
    for (auto& v : den) v = uni(rng, 1.0, 3.0);
    const double w1 = uni(rng, 0.3, 1.2), p1 = uni(rng, 0.0, 3.0);
    return [c, den, w1, p1](double xi, double x) {
        const Jet2 t = Jet2::variable(1, xi);
        const Jet2 xj = Jet2::variable(2, x);
        const Jet2 r1 = (c[0] + c[1] * t + c[2] * t * t) / (den[0] + t * t);
        const Jet2 r2 = (c[3] + c[4] * t + c[5] * t * t) / (den[1] + t * t);
        return r1 + r2 * sin(w1 * xj + p1);
    };
}

KillingMetricSpec random_killing_spec(std::mt19937_64& rng) {
    const double p0 = 0.6 + uni(rng, 0.0, 0.7), p1 = uni(rng, 0.0, 0.7), p2 = uni(rng, 0.0, 0.7);
    const double q0 = uni(rng, -1.0, 1.0), q1 = uni(rng, -1.0, 1.0), q2 = uni(rng, -1.0, 1.0);
    const double o0 = 0.7 + uni(rng, 0.0, 0.8), o1 = uni(rng, 0.0, 0.8);
    const double t0 = uni(rng, -1.0, 1.0), t1 = uni(rng, 0.3, 1.2), t2 = uni(rng, 0.0, 3.0);
    const double t3 = uni(rng, -1.0, 1.0);
    const double f1 = uni(rng, -1.0, 1.0), f2 = uni(rng, -1.0, 1.0), f3 = uni(rng, -1.0, 1.0);
    KillingMetricSpec s;
    s.p = [p0, p1, p2](double y) {
        const Jet1 yj = Jet1::variable(y);
        return p0 + p1 * yj + p2 * yj * yj;
    };
    s.q = [q0, q1, q2](double y) {
        const Jet1 yj = Jet1::variable(y);
        return q0 + q1 * yj + q2 * yj * yj;
    };
    s.Omega = [o0, o1](double y) {
        const Jet1 yj = Jet1::variable(y);
        return o0 + o1 * yj * yj;
    };
    s.tau = [t0, t1, t2, t3](double x) {
        const Jet1 xj = Jet1::variable(x);
        return t0 * sin(t1 * xj + t2) + t3 * xj;
    };
    s.f = [f1, f2, f3](double y) {
        const Jet1 yj = Jet1::variable(y);
        return f1 * yj + f2 * yj * yj + f3 * yj * yj * yj;
    };
    s.y_lo = 0.5;
    s.y_hi = 3.0;
    s.name = "appendix-random";
    return s;
}

std::vector<std::pair<double, double>> sample_box(std::mt19937_64& rng, int n,
                                                  double lo1, double hi1,
                                                  double lo2, double hi2) {
    std::vector<std::pair<double, double>> pts;
    pts.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double a = uni(rng, lo1, hi1);
        const double b = uni(rng, lo2, hi2);
        pts.emplace_back(a, b);
    }
    return pts;
}

}  // namespace cigarlab
