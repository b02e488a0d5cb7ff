#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "cigarlab/fixtures.hpp"
#include "cigarlab/liouville.hpp"
#include "cigarlab/variation.hpp"
#include "doctest.h"

using namespace cigarlab;

TEST_CASE("gauge fields reduce to pure diffeomorphism data") {
    const VariationField f = gauge_variation([](double x) {
        const Jet1 xj = Jet1::variable(x);
        return 0.3 + 1.7 * xj;
    });
    for (double r : {0.2, 1.0, 1.8}) {
        const HPair h = h_from_V(f, r, 0.4);
        CHECK(std::abs(h.h11) <= 1e-13);
        CHECK(h.h22 == doctest::Approx(-2.0 * (0.3 + 1.7 * 0.4)).epsilon(1e-13));
        CHECK(std::abs(E_of_V(f, r, 0.4)) <= 1e-12);
        const DeltaK k = delta_sectional(f, r, 0.4);
        CHECK(std::abs(k.dk12) <= 1e-12);
        CHECK(std::abs(k.dk23) <= 1e-12);
        CHECK(std::abs(k.dk13) <= 1e-12);
    }
}

TEST_CASE("log solution pins the operator values") {
    const VariationField f = v_log_field();
    CHECK(E_of_V(f, 1.0, 0.0) == doctest::Approx(-80.0 * std::sqrt(2.0) / 3.0).epsilon(1e-12));
    CHECK(E_of_V(f, 0.1, 2.0) == doctest::Approx(-22.740837634550822).epsilon(1e-12));
    CHECK(E_of_V(f, 1.9, -1.0) == doctest::Approx(-441.52472655012321).epsilon(1e-12));
    // closed form -16 sqrt(2) (4 + r^2)/(4 - r^2) across the radius range
    for (double r = 0.05; r < 1.9; r += 0.05) {
        const double expect = -16.0 * std::sqrt(2.0) * (4.0 + r * r) / (4.0 - r * r);
        CHECK(E_of_V(f, r, 0.7) == doctest::Approx(expect).epsilon(1e-11));
    }
}

TEST_CASE("operator value and radial derivative from dual evaluation") {
    std::mt19937_64 rng(3);
    const VariationField f = random_variation(rng);
    const double r = 0.9, x = -0.6, e = 1e-5;
    const Dual d = E_of_V_dual(f, r, x);
    CHECK(d.v == doctest::Approx(E_of_V(f, r, x)).epsilon(1e-13));
    const double fd = (E_of_V(f, r + e, x) - E_of_V(f, r - e, x)) / (2.0 * e);
    CHECK(d.d == doctest::Approx(fd).epsilon(1e-6));
}

TEST_CASE("radial profile ODE fixture") {
    const ScalarField1 Astar = [](double r) {
        const Jet1 rj = Jet1::variable(r);
        return 16.0 / (16.0 - rj * rj * rj * rj);
    };
    for (double r : {0.3, 1.0, 1.7}) {
        const AOdeResiduals res = a_ode_check(Astar, r);
        CHECK(std::abs(res.ode1) <= 1e-12);
        CHECK(std::abs(res.ode2) <= 1e-12);
        CHECK(std::abs(res.diff) <= 1e-12);
    }
    const ScalarField1 Asq = [](double r) {
        const Jet1 rj = Jet1::variable(r);
        return rj * rj;
    };
    // (16 - r^4) A' - 4 r^3 A at A = r^2, r = 1: 15*2 - 4 = 26
    CHECK(a_ode_check(Asq, 1.0).diff == doctest::Approx(26.0).epsilon(1e-15));
}

TEST_CASE("assembled components match the direct displays at one fixture") {
    std::mt19937_64 rng(17);
    const VariationField f = random_variation(rng);
    const ScalarField1 A = random_radial_profile(rng);
    const PerturbationComponents pc = pc_from_vA(f.V, A);
    const double r = 1.2, x = 0.3;
    const AssembledE ae = assemble_Eij(pc, r, x);
    double e11 = 0, e22 = 0;
    direct_E11_E22(f.V, A, r, x, &e11, &e22);
    CHECK(std::abs(ae.e11 - e11) <= 1e-8 * (1.0 + std::abs(e11)));
    CHECK(std::abs(ae.e22 - e22) <= 1e-8 * (1.0 + std::abs(e22)));
    CHECK(std::abs(ae.e12 - ae.e12_direct) <= 1e-10);
    CHECK(std::abs(ae.e33 - ae.e33_direct) <= 1e-10);
    // off-diagonal and angular equations close after the substitutions
    CHECK(std::abs(ae.e12) <= 1e-9);
    CHECK(std::abs(ae.e33) <= 1e-9);
}

TEST_CASE("scalar operator proportionality") {
    std::mt19937_64 rng(23);
    const VariationField f = random_variation(rng);
    for (double r : {0.4, 1.0, 1.6}) {
        const double E = E_of_V(f, r, 0.9);
        const ScalarField2 V = f.V;
        const ScalarField2 v = [V](double rr, double xx) {
            const Jet2 rj = Jet2::variable(1, rr);
            return (4.0 - rj * rj) * V(rr, xx);
        };
        const double B = B_of(v, zero_profile(), r, 0.9);
        CHECK(E == doctest::Approx(16.0 * (r * r + 4.0) / (4.0 - r * r) * B).epsilon(1e-11));
    }
}

TEST_CASE("domain guard") {
    CHECK_THROWS_AS(require_r_interior(0.0), DomainError);
    CHECK_THROWS_AS(require_r_interior(2.0), DomainError);
    CHECK_THROWS_AS(E_of_V(v_log_field(), 2.3, 0.0), DomainError);
}
