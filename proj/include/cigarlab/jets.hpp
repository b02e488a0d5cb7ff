#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace cigarlab {

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Truncated Taylor expansion of a scalar in two variables, exact through total
// order 3. One slot per multi-index; mixed-partial symmetry is structural.
struct Jet2 {
    double v = 0.0;
    double d1 = 0.0, d2 = 0.0;
    double d11 = 0.0, d12 = 0.0, d22 = 0.0;
    double d111 = 0.0, d112 = 0.0, d122 = 0.0, d222 = 0.0;

    static Jet2 constant(double c) {
        Jet2 j;
        j.v = c;
        return j;
    }
    // index is 1 or 2
    static Jet2 variable(int index, double value);

    Jet2 operator-() const;
};

Jet2 operator+(const Jet2& a, const Jet2& b);
Jet2 operator-(const Jet2& a, const Jet2& b);
Jet2 operator*(const Jet2& a, const Jet2& b);
Jet2 operator/(const Jet2& a, const Jet2& b);

Jet2 operator+(const Jet2& a, double c);
Jet2 operator+(double c, const Jet2& a);
Jet2 operator-(const Jet2& a, double c);
Jet2 operator-(double c, const Jet2& a);
Jet2 operator*(const Jet2& a, double c);
Jet2 operator*(double c, const Jet2& a);
Jet2 operator/(const Jet2& a, double c);
Jet2 operator/(double c, const Jet2& a);

// Post-compose with a univariate g given its derivatives g0..g3 at a.v
// (third-order Faa di Bruno in two variables).
Jet2 compose(const Jet2& a, double g0, double g1, double g2, double g3);

Jet2 exp(const Jet2& a);
Jet2 log(const Jet2& a);    // requires a.v > 0
Jet2 sqrt(const Jet2& a);   // requires a.v > 0
Jet2 pow(const Jet2& a, double p);  // requires a.v > 0
Jet2 sin(const Jet2& a);
Jet2 cos(const Jet2& a);
Jet2 sinh(const Jet2& a);
Jet2 cosh(const Jet2& a);
Jet2 tanh(const Jet2& a);
Jet2 recip(const Jet2& a);  // requires a.v != 0

// Derivative along the given active axis (1 or 2). The result is one order
// lower: its value/first/second slots are exact, its third-order slots are
// unknown and set to zero. Callers must not rely on third-order slots of a
// derived jet.
Jet2 d_axis(const Jet2& a, int axis);

// Univariate order-3 jet.
struct Jet1 {
    double v = 0.0, d1 = 0.0, d2 = 0.0, d3 = 0.0;

    static Jet1 constant(double c) {
        Jet1 j;
        j.v = c;
        return j;
    }
    static Jet1 variable(double value) {
        Jet1 j;
        j.v = value;
        j.d1 = 1.0;
        return j;
    }

    Jet1 operator-() const;
};

Jet1 operator+(const Jet1& a, const Jet1& b);
Jet1 operator-(const Jet1& a, const Jet1& b);
Jet1 operator*(const Jet1& a, const Jet1& b);
Jet1 operator/(const Jet1& a, const Jet1& b);

Jet1 operator+(const Jet1& a, double c);
Jet1 operator+(double c, const Jet1& a);
Jet1 operator-(const Jet1& a, double c);
Jet1 operator-(double c, const Jet1& a);
Jet1 operator*(const Jet1& a, double c);
Jet1 operator*(double c, const Jet1& a);
Jet1 operator/(const Jet1& a, double c);
Jet1 operator/(double c, const Jet1& a);

Jet1 compose(const Jet1& a, double g0, double g1, double g2, double g3);

Jet1 exp(const Jet1& a);
Jet1 log(const Jet1& a);
Jet1 sqrt(const Jet1& a);
Jet1 pow(const Jet1& a, double p);
Jet1 sin(const Jet1& a);
Jet1 cos(const Jet1& a);
Jet1 sinh(const Jet1& a);
Jet1 cosh(const Jet1& a);
Jet1 tanh(const Jet1& a);
Jet1 recip(const Jet1& a);

// Embed a univariate jet as a Jet2 depending on the given axis only.
Jet2 lift(const Jet1& a, int axis);

// Reparametrize axis 1: f carries jets in (s, x) and s = s(t) is an order-3
// jet; the result carries jets in (t, x). Axis-2-only slots are unchanged.
Jet2 reparam1(const Jet2& f, const Jet1& s);

// First-order dual number, for d/dt of already-assembled scalar expressions.
struct Dual {
    double v = 0.0, d = 0.0;
    Dual() = default;
    Dual(double value, double deriv) : v(value), d(deriv) {}
    static Dual constant(double c) { return Dual(c, 0.0); }
    static Dual variable(double value) { return Dual(value, 1.0); }
    Dual operator-() const { return Dual(-v, -d); }
};

inline Dual operator+(Dual a, Dual b) { return Dual(a.v + b.v, a.d + b.d); }
inline Dual operator-(Dual a, Dual b) { return Dual(a.v - b.v, a.d - b.d); }
inline Dual operator*(Dual a, Dual b) { return Dual(a.v * b.v, a.d * b.v + a.v * b.d); }
inline Dual operator/(Dual a, Dual b) {
    if (b.v == 0.0) throw DomainError("dual division by zero");
    const double q = a.v / b.v;
    return Dual(q, (a.d - q * b.d) / b.v);
}
inline Dual operator+(Dual a, double c) { return Dual(a.v + c, a.d); }
inline Dual operator+(double c, Dual a) { return a + c; }
inline Dual operator-(Dual a, double c) { return Dual(a.v - c, a.d); }
inline Dual operator-(double c, Dual a) { return Dual(c - a.v, -a.d); }
inline Dual operator*(Dual a, double c) { return Dual(a.v * c, a.d * c); }
inline Dual operator*(double c, Dual a) { return a * c; }
inline Dual operator/(Dual a, double c) { return Dual(a.v / c, a.d / c); }
inline Dual operator/(double c, Dual a) { return Dual::constant(c) / a; }

// A scalar field over the two active coordinates: point -> order-3 jet.
using ScalarField2 = std::function<Jet2(double, double)>;
// A univariate jet-valued function.
using ScalarField1 = std::function<Jet1(double)>;

}  // namespace cigarlab
