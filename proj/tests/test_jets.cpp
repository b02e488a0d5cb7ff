#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "cigarlab/jets.hpp"
#include "doctest.h"

using namespace cigarlab;

namespace {

void check_slots(const Jet2& a, const Jet2& b, double tol) {
    CHECK(a.v == doctest::Approx(b.v).epsilon(tol));
    CHECK(a.d1 == doctest::Approx(b.d1).epsilon(tol));
    CHECK(a.d2 == doctest::Approx(b.d2).epsilon(tol));
    CHECK(a.d11 == doctest::Approx(b.d11).epsilon(tol));
    CHECK(a.d12 == doctest::Approx(b.d12).epsilon(tol));
    CHECK(a.d22 == doctest::Approx(b.d22).epsilon(tol));
    CHECK(a.d111 == doctest::Approx(b.d111).epsilon(tol));
    CHECK(a.d112 == doctest::Approx(b.d112).epsilon(tol));
    CHECK(a.d122 == doctest::Approx(b.d122).epsilon(tol));
    CHECK(a.d222 == doctest::Approx(b.d222).epsilon(tol));
}

}  // namespace

TEST_CASE("variables carry unit first-order slots") {
    const Jet2 r = Jet2::variable(1, 0.7);
    CHECK(r.v == 0.7);
    CHECK(r.d1 == 1.0);
    CHECK(r.d2 == 0.0);
    CHECK(r.d11 == 0.0);
    const Jet2 x = Jet2::variable(2, -1.5);
    CHECK(x.v == -1.5);
    CHECK(x.d1 == 0.0);
    CHECK(x.d2 == 1.0);
    const Jet2 c = Jet2::constant(3.0);
    CHECK(c.v == 3.0);
    CHECK(c.d1 == 0.0);
}

TEST_CASE("product rule through order three on monomials") {
    // f = r^2 x at (r, x) = (2, 3): every partial is an integer
    const Jet2 r = Jet2::variable(1, 2.0), x = Jet2::variable(2, 3.0);
    const Jet2 f = r * r * x;
    CHECK(f.v == 12.0);
    CHECK(f.d1 == 12.0);   // 2 r x
    CHECK(f.d2 == 4.0);    // r^2
    CHECK(f.d11 == 6.0);   // 2 x
    CHECK(f.d12 == 4.0);   // 2 r
    CHECK(f.d22 == 0.0);
    CHECK(f.d111 == 0.0);
    CHECK(f.d112 == 2.0);
    CHECK(f.d122 == 0.0);
    CHECK(f.d222 == 0.0);
}

TEST_CASE("quotient agrees with reciprocal times numerator") {
    const Jet2 r = Jet2::variable(1, 0.9), x = Jet2::variable(2, 0.4);
    const Jet2 a = 1.0 + r * r + sin(x);
    const Jet2 b = 2.0 + cos(r * x);
    check_slots(a / b, a * recip(b), 1e-14);
}

TEST_CASE("elementary functions at a known point") {
    const Jet2 r = Jet2::variable(1, 1.0);
    const Jet2 f = exp(2.0 * r);
    const double e2 = std::exp(2.0);
    CHECK(f.v == doctest::Approx(e2).epsilon(1e-15));
    CHECK(f.d1 == doctest::Approx(2.0 * e2).epsilon(1e-15));
    CHECK(f.d11 == doctest::Approx(4.0 * e2).epsilon(1e-15));
    CHECK(f.d111 == doctest::Approx(8.0 * e2).epsilon(1e-15));

    const Jet2 g = pow(r + 1.0, 2.5);
    CHECK(g.d1 == doctest::Approx(2.5 * std::pow(2.0, 1.5)).epsilon(1e-14));
    CHECK(g.d11 == doctest::Approx(2.5 * 1.5 * std::pow(2.0, 0.5)).epsilon(1e-14));

    const Jet2 t = tanh(r);
    const double th = std::tanh(1.0);
    CHECK(t.v == doctest::Approx(th).epsilon(1e-15));
    CHECK(t.d1 == doctest::Approx(1.0 - th * th).epsilon(1e-14));
}

TEST_CASE("compose applies the univariate chain rule") {
    // g(u) = u^3 composed with u = r + x^2
    const Jet2 r = Jet2::variable(1, 0.5), x = Jet2::variable(2, 1.5);
    const Jet2 u = r + x * x;
    const double uv = u.v;
    const Jet2 via_compose = compose(u, uv * uv * uv, 3.0 * uv * uv, 6.0 * uv, 6.0);
    check_slots(via_compose, u * u * u, 1e-13);
}

TEST_CASE("d_axis lowers the order and zeroes the unknown slots") {
    const Jet2 r = Jet2::variable(1, 0.8), x = Jet2::variable(2, -0.3);
    const Jet2 f = exp(r) * sin(x) + r * r * x;
    const Jet2 fr = d_axis(f, 1);
    CHECK(fr.v == f.d1);
    CHECK(fr.d1 == f.d11);
    CHECK(fr.d2 == f.d12);
    CHECK(fr.d11 == f.d111);
    CHECK(fr.d12 == f.d112);
    CHECK(fr.d22 == f.d122);
    CHECK(fr.d111 == 0.0);
    CHECK(fr.d222 == 0.0);
    const Jet2 fx = d_axis(f, 2);
    CHECK(fx.v == f.d2);
    CHECK(fx.d1 == f.d12);
    CHECK(fx.d2 == f.d22);
    CHECK(fx.d22 == f.d222);
}

TEST_CASE("lift embeds a univariate jet along one axis") {
    Jet1 a;
    a.v = 2.0;
    a.d1 = 3.0;
    a.d2 = 5.0;
    a.d3 = 7.0;
    const Jet2 l1 = lift(a, 1);
    CHECK(l1.v == 2.0);
    CHECK(l1.d1 == 3.0);
    CHECK(l1.d11 == 5.0);
    CHECK(l1.d111 == 7.0);
    CHECK(l1.d2 == 0.0);
    CHECK(l1.d12 == 0.0);
    CHECK(l1.d222 == 0.0);
    const Jet2 l2 = lift(a, 2);
    CHECK(l2.d2 == 3.0);
    CHECK(l2.d22 == 5.0);
    CHECK(l2.d222 == 7.0);
    CHECK(l2.d1 == 0.0);
}

TEST_CASE("reparam1 agrees with composing before differentiating") {
    // f(s, x) = exp(s) sin(x) + s^2 x, s(t) = 2 tanh(t / 2)
    const double t0 = 0.9, x0 = 0.6;
    const Jet1 s = 2.0 * tanh(Jet1::variable(t0) / 2.0);
    auto f_of = [](const Jet2& sj, const Jet2& xj) {
        return exp(sj) * sin(xj) + sj * sj * xj;
    };
    const Jet2 f = f_of(Jet2::variable(1, s.v), Jet2::variable(2, x0));
    const Jet2 via_reparam = reparam1(f, s);
    // direct: substitute s(t) as a Jet2 expression in t
    const Jet2 tj = Jet2::variable(1, t0);
    const Jet2 direct = f_of(2.0 * tanh(tj / 2.0), Jet2::variable(2, x0));
    check_slots(via_reparam, direct, 1e-13);
}

TEST_CASE("domain guards throw") {
    const Jet2 neg = Jet2::constant(-1.0);
    CHECK_THROWS_AS(log(neg), DomainError);
    CHECK_THROWS_AS(sqrt(neg), DomainError);
    CHECK_THROWS_AS(pow(neg, 0.5), DomainError);
    CHECK_THROWS_AS(recip(Jet2::constant(0.0)), DomainError);
    CHECK_THROWS_AS(Jet2::variable(3, 1.0), DomainError);
    CHECK_THROWS_AS(d_axis(Jet2::constant(1.0), 0), DomainError);
}

TEST_CASE("univariate jets match the bivariate ones on axis 1") {
    const double r0 = 1.3;
    const Jet1 a = exp(Jet1::variable(r0)) * sin(Jet1::variable(r0));
    const Jet2 rj = Jet2::variable(1, r0);
    const Jet2 b = exp(rj) * sin(rj);
    CHECK(a.v == doctest::Approx(b.v).epsilon(1e-15));
    CHECK(a.d1 == doctest::Approx(b.d1).epsilon(1e-15));
    CHECK(a.d2 == doctest::Approx(b.d11).epsilon(1e-15));
    CHECK(a.d3 == doctest::Approx(b.d111).epsilon(1e-15));
}

TEST_CASE("dual numbers differentiate assembled expressions") {
    const Dual t = Dual::variable(0.7);
    const Dual y = (2.0 - t * t) / (1.0 + t);
    // y = (2 - t^2)/(1 + t); y' = (-t^2 - 2t - 2)/(1+t)^2
    const double tv = 0.7;
    CHECK(y.v == doctest::Approx((2.0 - tv * tv) / (1.0 + tv)).epsilon(1e-15));
    CHECK(y.d ==
          doctest::Approx((-tv * tv - 2.0 * tv - 2.0) / ((1.0 + tv) * (1.0 + tv)))
              .epsilon(1e-14));
}
