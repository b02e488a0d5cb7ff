#include "cigarlab/jets.hpp"

#include <cmath>

namespace cigarlab {

Jet2 Jet2::variable(int index, double value) {
    if (index != 1 && index != 2) throw DomainError("Jet2::variable: index must be 1 or 2");
    Jet2 j;
    j.v = value;
    (index == 1 ? j.d1 : j.d2) = 1.0;
    return j;
}

Jet2 Jet2::operator-() const {
    Jet2 r;
    r.v = -v;
    r.d1 = -d1;
    r.d2 = -d2;
    r.d11 = -d11;
    r.d12 = -d12;
    r.d22 = -d22;
    r.d111 = -d111;
    r.d112 = -d112;
    r.d122 = -d122;
    r.d222 = -d222;
    return r;
}

Jet2 operator+(const Jet2& a, const Jet2& b) {
    Jet2 r;
    r.v = a.v + b.v;
    r.d1 = a.d1 + b.d1;
    r.d2 = a.d2 + b.d2;
    r.d11 = a.d11 + b.d11;
    r.d12 = a.d12 + b.d12;
    r.d22 = a.d22 + b.d22;
    r.d111 = a.d111 + b.d111;
    r.d112 = a.d112 + b.d112;
    r.d122 = a.d122 + b.d122;
    r.d222 = a.d222 + b.d222;
    return r;
}

Jet2 operator-(const Jet2& a, const Jet2& b) { return a + (-b); }

Jet2 operator*(const Jet2& a, const Jet2& b) {
    // Leibniz rule per slot, truncated at total order 3.
    Jet2 r;
    r.v = a.v * b.v;
    r.d1 = a.d1 * b.v + a.v * b.d1;
    r.d2 = a.d2 * b.v + a.v * b.d2;
    r.d11 = a.d11 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d11;
    r.d12 = a.d12 * b.v + a.d1 * b.d2 + a.d2 * b.d1 + a.v * b.d12;
    r.d22 = a.d22 * b.v + 2.0 * a.d2 * b.d2 + a.v * b.d22;
    r.d111 = a.d111 * b.v + 3.0 * a.d11 * b.d1 + 3.0 * a.d1 * b.d11 + a.v * b.d111;
    r.d112 = a.d112 * b.v + a.d11 * b.d2 + 2.0 * a.d12 * b.d1 + 2.0 * a.d1 * b.d12 +
             a.d2 * b.d11 + a.v * b.d112;
    r.d122 = a.d122 * b.v + a.d22 * b.d1 + 2.0 * a.d12 * b.d2 + 2.0 * a.d2 * b.d12 +
             a.d1 * b.d22 + a.v * b.d122;
    r.d222 = a.d222 * b.v + 3.0 * a.d22 * b.d2 + 3.0 * a.d2 * b.d22 + a.v * b.d222;
    return r;
}

Jet2 operator/(const Jet2& a, const Jet2& b) { return a * recip(b); }

Jet2 operator+(const Jet2& a, double c) {
    Jet2 r = a;
    r.v += c;
    return r;
}
Jet2 operator+(double c, const Jet2& a) { return a + c; }
Jet2 operator-(const Jet2& a, double c) { return a + (-c); }
Jet2 operator-(double c, const Jet2& a) { return (-a) + c; }
Jet2 operator*(const Jet2& a, double c) {
    Jet2 r;
    r.v = a.v * c;
    r.d1 = a.d1 * c;
    r.d2 = a.d2 * c;
    r.d11 = a.d11 * c;
    r.d12 = a.d12 * c;
    r.d22 = a.d22 * c;
    r.d111 = a.d111 * c;
    r.d112 = a.d112 * c;
    r.d122 = a.d122 * c;
    r.d222 = a.d222 * c;
    return r;
}
Jet2 operator*(double c, const Jet2& a) { return a * c; }
Jet2 operator/(const Jet2& a, double c) { return a * (1.0 / c); }
Jet2 operator/(double c, const Jet2& a) { return recip(a) * c; }

Jet2 compose(const Jet2& u, double g0, double g1, double g2, double g3) {
    Jet2 r;
    r.v = g0;
    r.d1 = g1 * u.d1;
    r.d2 = g1 * u.d2;
    r.d11 = g2 * u.d1 * u.d1 + g1 * u.d11;
    r.d12 = g2 * u.d1 * u.d2 + g1 * u.d12;
    r.d22 = g2 * u.d2 * u.d2 + g1 * u.d22;
    r.d111 = g3 * u.d1 * u.d1 * u.d1 + 3.0 * g2 * u.d1 * u.d11 + g1 * u.d111;
    r.d112 = g3 * u.d1 * u.d1 * u.d2 + g2 * (u.d11 * u.d2 + 2.0 * u.d12 * u.d1) + g1 * u.d112;
    r.d122 = g3 * u.d1 * u.d2 * u.d2 + g2 * (u.d22 * u.d1 + 2.0 * u.d12 * u.d2) + g1 * u.d122;
    r.d222 = g3 * u.d2 * u.d2 * u.d2 + 3.0 * g2 * u.d2 * u.d22 + g1 * u.d222;
    return r;
}

Jet2 exp(const Jet2& a) {
    const double e = std::exp(a.v);
    return compose(a, e, e, e, e);
}

Jet2 log(const Jet2& a) {
    if (a.v <= 0.0) throw DomainError("log: value slot must be positive");
    const double i = 1.0 / a.v;
    return compose(a, std::log(a.v), i, -i * i, 2.0 * i * i * i);
}

Jet2 sqrt(const Jet2& a) {
    if (a.v <= 0.0) throw DomainError("sqrt: value slot must be positive");
    const double s = std::sqrt(a.v);
    const double i = 1.0 / a.v;
    return compose(a, s, 0.5 * s * i, -0.25 * s * i * i, 0.375 * s * i * i * i);
}

Jet2 pow(const Jet2& a, double p) {
    if (a.v <= 0.0) throw DomainError("pow: value slot must be positive");
    const double w = std::pow(a.v, p);
    const double i = 1.0 / a.v;
    return compose(a, w, p * w * i, p * (p - 1.0) * w * i * i,
                   p * (p - 1.0) * (p - 2.0) * w * i * i * i);
}

Jet2 sin(const Jet2& a) {
    const double s = std::sin(a.v), c = std::cos(a.v);
    return compose(a, s, c, -s, -c);
}

Jet2 cos(const Jet2& a) {
    const double s = std::sin(a.v), c = std::cos(a.v);
    return compose(a, c, -s, -c, s);
}

Jet2 sinh(const Jet2& a) {
    const double s = std::sinh(a.v), c = std::cosh(a.v);
    return compose(a, s, c, s, c);
}

Jet2 cosh(const Jet2& a) {
    const double s = std::sinh(a.v), c = std::cosh(a.v);
    return compose(a, c, s, c, s);
}

Jet2 tanh(const Jet2& a) {
    const double t = std::tanh(a.v);
    const double u = 1.0 - t * t;  // sech^2
    return compose(a, t, u, -2.0 * t * u, u * (6.0 * t * t - 2.0));
}

Jet2 recip(const Jet2& a) {
    if (a.v == 0.0) throw DomainError("recip: value slot must be nonzero");
    const double i = 1.0 / a.v;
    return compose(a, i, -i * i, 2.0 * i * i * i, -6.0 * i * i * i * i);
}

Jet2 d_axis(const Jet2& a, int axis) {
    Jet2 r;
    if (axis == 1) {
        r.v = a.d1;
        r.d1 = a.d11;
        r.d2 = a.d12;
        r.d11 = a.d111;
        r.d12 = a.d112;
        r.d22 = a.d122;
    } else if (axis == 2) {
        r.v = a.d2;
        r.d1 = a.d12;
        r.d2 = a.d22;
        r.d11 = a.d112;
        r.d12 = a.d122;
        r.d22 = a.d222;
    } else {
        throw DomainError("d_axis: axis must be 1 or 2");
    }
    return r;
}

Jet1 Jet1::operator-() const {
    Jet1 r;
    r.v = -v;
    r.d1 = -d1;
    r.d2 = -d2;
    r.d3 = -d3;
    return r;
}

Jet1 operator+(const Jet1& a, const Jet1& b) {
    Jet1 r;
    r.v = a.v + b.v;
    r.d1 = a.d1 + b.d1;
    r.d2 = a.d2 + b.d2;
    r.d3 = a.d3 + b.d3;
    return r;
}

Jet1 operator-(const Jet1& a, const Jet1& b) { return a + (-b); }

Jet1 operator*(const Jet1& a, const Jet1& b) {
    Jet1 r;
    r.v = a.v * b.v;
    r.d1 = a.d1 * b.v + a.v * b.d1;
    r.d2 = a.d2 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d2;
    r.d3 = a.d3 * b.v + 3.0 * a.d2 * b.d1 + 3.0 * a.d1 * b.d2 + a.v * b.d3;
    return r;
}

Jet1 operator/(const Jet1& a, const Jet1& b) { return a * recip(b); }

Jet1 operator+(const Jet1& a, double c) {
    Jet1 r = a;
    r.v += c;
    return r;
}
Jet1 operator+(double c, const Jet1& a) { return a + c; }
Jet1 operator-(const Jet1& a, double c) { return a + (-c); }
Jet1 operator-(double c, const Jet1& a) { return (-a) + c; }
Jet1 operator*(const Jet1& a, double c) {
    Jet1 r;
    r.v = a.v * c;
    r.d1 = a.d1 * c;
    r.d2 = a.d2 * c;
    r.d3 = a.d3 * c;
    return r;
}
Jet1 operator*(double c, const Jet1& a) { return a * c; }
Jet1 operator/(const Jet1& a, double c) { return a * (1.0 / c); }
Jet1 operator/(double c, const Jet1& a) { return recip(a) * c; }

Jet1 compose(const Jet1& u, double g0, double g1, double g2, double g3) {
    Jet1 r;
    r.v = g0;
    r.d1 = g1 * u.d1;
    r.d2 = g2 * u.d1 * u.d1 + g1 * u.d2;
    r.d3 = g3 * u.d1 * u.d1 * u.d1 + 3.0 * g2 * u.d1 * u.d2 + g1 * u.d3;
    return r;
}

Jet1 exp(const Jet1& a) {
    const double e = std::exp(a.v);
    return compose(a, e, e, e, e);
}

Jet1 log(const Jet1& a) {
    if (a.v <= 0.0) throw DomainError("log: value slot must be positive");
    const double i = 1.0 / a.v;
    return compose(a, std::log(a.v), i, -i * i, 2.0 * i * i * i);
}

Jet1 sqrt(const Jet1& a) {
    if (a.v <= 0.0) throw DomainError("sqrt: value slot must be positive");
    const double s = std::sqrt(a.v);
    const double i = 1.0 / a.v;
    return compose(a, s, 0.5 * s * i, -0.25 * s * i * i, 0.375 * s * i * i * i);
}

Jet1 pow(const Jet1& a, double p) {
    if (a.v <= 0.0) throw DomainError("pow: value slot must be positive");
    const double w = std::pow(a.v, p);
    const double i = 1.0 / a.v;
    return compose(a, w, p * w * i, p * (p - 1.0) * w * i * i,
                   p * (p - 1.0) * (p - 2.0) * w * i * i * i);
}

Jet1 sin(const Jet1& a) {
    const double s = std::sin(a.v), c = std::cos(a.v);
    return compose(a, s, c, -s, -c);
}

Jet1 cos(const Jet1& a) {
    const double s = std::sin(a.v), c = std::cos(a.v);
    return compose(a, c, -s, -c, s);
}

Jet1 sinh(const Jet1& a) {
    const double s = std::sinh(a.v), c = std::cosh(a.v);
    return compose(a, s, c, s, c);
}

Jet1 cosh(const Jet1& a) {
    const double s = std::sinh(a.v), c = std::cosh(a.v);
    return compose(a, c, s, c, s);
}

Jet1 tanh(const Jet1& a) {
    const double t = std::tanh(a.v);
    const double u = 1.0 - t * t;
    return compose(a, t, u, -2.0 * t * u, u * (6.0 * t * t - 2.0));
}

Jet1 recip(const Jet1& a) {
    if (a.v == 0.0) throw DomainError("recip: value slot must be nonzero");
    const double i = 1.0 / a.v;
    return compose(a, i, -i * i, 2.0 * i * i * i, -6.0 * i * i * i * i);
}

Jet2 lift(const Jet1& a, int axis) {
    Jet2 r;
    r.v = a.v;
    if (axis == 1) {
        r.d1 = a.d1;
        r.d11 = a.d2;
        r.d111 = a.d3;
    } else if (axis == 2) {
        r.d2 = a.d1;
        r.d22 = a.d2;
        r.d222 = a.d3;
    } else {
        throw DomainError("lift: axis must be 1 or 2");
    }
    return r;
}

Jet2 reparam1(const Jet2& f, const Jet1& s) {
    const double a = s.d1, b = s.d2, c = s.d3;
    Jet2 r;
    r.v = f.v;
    r.d1 = a * f.d1;
    r.d2 = f.d2;
    r.d11 = a * a * f.d11 + b * f.d1;
    r.d12 = a * f.d12;
    r.d22 = f.d22;
    r.d111 = a * a * a * f.d111 + 3.0 * a * b * f.d11 + c * f.d1;
    r.d112 = a * a * f.d112 + b * f.d12;
    r.d122 = a * f.d122;
    r.d222 = f.d222;
    return r;
}

}  // namespace cigarlab
