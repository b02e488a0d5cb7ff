#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "cigarlab/eigensolve.hpp"
#include "cigarlab/liouville.hpp"
#include "doctest.h"

using namespace cigarlab;

namespace {

GridField kernel_boundary(const HalfStripGrid& grid) {
    return boundary_from(grid,
                         [](double xi, double) { return xi > 0.0 ? w0_kernel(xi) : 0.0; });
}

}  // namespace

TEST_CASE("grid validation") {
    const HalfStripGrid g(2.0, 1.0, 0.1);
    CHECK(g.nxi == 20);
    CHECK(g.nx == 20);
    CHECK(g.node_count() == 21u * 21u);
    CHECK(g.xi(3) == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(g.x(0) == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(g.idx(2, 3) == 3u * 21u + 2u);
    CHECK_THROWS_AS(HalfStripGrid(1.0, 1.0, 0.3), DomainError);   // spacing must divide
    CHECK_THROWS_AS(HalfStripGrid(0.5, 1.0, 0.1), DomainError);   // too few wall rows
    CHECK_THROWS_AS(HalfStripGrid(2.0, 0.3, 0.1), DomainError);   // too few side rows
    CHECK_THROWS_AS(HalfStripGrid(2.0, 1.0, -0.1), DomainError);
}

TEST_CASE("discrete operator shape") {
    const HalfStripGrid g(2.0, 1.0, 0.1);
    const DiscreteOperator op = assemble(g);
    CHECK(op.ni == 19);
    CHECK(op.nj == 19);
    CHECK(op.interior_count() == 19u * 19u);
    CHECK(op.offdiag == doctest::Approx(-100.0).epsilon(1e-15));
    // diagonal entries are 4/h^2 + P(xi_i), independent of j
    CHECK(op.diag[op.k(3, 5)] == doctest::Approx(400.0 + P_coeff(0.3)).epsilon(1e-14));
    CHECK(op.diag[op.k(3, 5)] == doctest::Approx(op.diag[op.k(3, 11)]).epsilon(1e-15));
}

TEST_CASE("solver configuration validation") {
    const HalfStripGrid g(2.0, 1.0, 0.1);
    const GridField bc = kernel_boundary(g);
    SolverConfig cfg;
    cfg.linear_tol = 0.0;
    CHECK_THROWS_AS(solve_dirichlet(g, bc, cfg), DomainError);
    cfg.linear_tol = 1e-3;  // looser than the allowed ceiling
    CHECK_THROWS_AS(solve_dirichlet(g, bc, cfg), DomainError);
    cfg.linear_tol = 1e-10;
    CHECK_NOTHROW(solve_dirichlet(g, bc, cfg));
}

TEST_CASE("wall data must vanish") {
    const HalfStripGrid g(2.0, 1.0, 0.1);
    GridField bc = kernel_boundary(g);
    bc.at(0, 4) = 0.1;
    SolverConfig cfg;
    CHECK_THROWS_AS(solve_dirichlet(g, bc, cfg), DomainError);
}

TEST_CASE("zero data gives the zero field with both methods") {
    const HalfStripGrid g(2.0, 1.0, 0.1);
    for (SolveMethod m : {SolveMethod::iterative_spd, SolveMethod::direct_banded}) {
        SolverConfig cfg;
        cfg.method = m;
        const GridField sol = solve_dirichlet(g, GridField(g), cfg);
        for (double v : sol.values) CHECK(v == 0.0);
    }
}

TEST_CASE("iterative and banded solutions coincide") {
    const HalfStripGrid g(1.5, 0.75, 0.05);
    const GridField bc = kernel_boundary(g);
    SolverConfig cg, direct;
    direct.method = SolveMethod::direct_banded;
    SolveStats scg, sdir;
    const GridField a = solve_dirichlet(g, bc, cg, &scg);
    const GridField b = solve_dirichlet(g, bc, direct, &sdir);
    CHECK(scg.iterations > 0);
    CHECK(scg.residual <= 1e-10);
    CHECK(sdir.iterations == 1);  // one factorization, no iteration count
    double scale = 0, diff = 0;
    for (std::size_t t = 0; t < a.values.size(); ++t) {
        scale = std::max(scale, std::abs(b.values[t]));
        diff = std::max(diff, std::abs(a.values[t] - b.values[t]));
    }
    CHECK(diff <= 1e-8 * (1.0 + scale));
}

TEST_CASE("solution is deterministic across repeated runs") {
    const HalfStripGrid g(1.5, 0.75, 0.05);
    const GridField bc = kernel_boundary(g);
    SolverConfig cfg;
    const GridField a = solve_dirichlet(g, bc, cfg);
    const GridField b = solve_dirichlet(g, bc, cfg);
    for (std::size_t t = 0; t < a.values.size(); ++t) CHECK(a.values[t] == b.values[t]);
}

TEST_CASE("manufactured kernel is recovered away from the wall") {
    const HalfStripGrid g(3.0, 1.5, 0.05);
    SolverConfig cfg;
    const GridField sol = solve_dirichlet(g, kernel_boundary(g), cfg);
    double w0max = 0, err = 0;
    for (int i = 0; i <= g.nxi; ++i) w0max = std::max(w0max, w0_kernel(std::max(g.xi(i), 1e-9)));
    for (int j = 0; j <= g.nx; ++j)
        for (int i = 0; i <= g.nxi; ++i) {
            if (g.xi(i) < 0.5) continue;
            err = std::max(err, std::abs(sol.at(i, j) - w0_kernel(g.xi(i))));
        }
    CHECK(err <= 5e-3 * w0max);
}

TEST_CASE("maximum principle for nonnegative data") {
    std::mt19937_64 rng(7);
    const HalfStripGrid g(2.0, 1.0, 0.1);
    GridField bc(g);
    std::uniform_real_distribution<double> u(0.0, 2.0);
    for (int j = 0; j <= g.nx; ++j) bc.at(g.nxi, j) = u(rng);
    for (int i = 1; i <= g.nxi; ++i) {
        bc.at(i, 0) = u(rng);
        bc.at(i, g.nx) = u(rng);
    }
    SolverConfig cfg;
    const GridField sol = solve_dirichlet(g, bc, cfg);
    double mn = 1e300, mx = 0;
    for (double v : sol.values) {
        mn = std::min(mn, v);
        mx = std::max(mx, v);
    }
    CHECK(mn >= -1e-12 * 2.0);
    CHECK(mx <= 2.0 * (1.0 + 1e-12));  // no interior overshoot either
}

TEST_CASE("non-convergence raises with the achieved residual") {
    const HalfStripGrid g(2.0, 1.0, 0.1);
    SolverConfig cfg;
    cfg.max_iter = 1;
    try {
        solve_dirichlet(g, kernel_boundary(g), cfg);
        FAIL("expected NonConvergenceError");
    } catch (const NonConvergenceError& e) {
        CHECK(e.achieved > 1e-10);
    }
}

TEST_CASE("convergence study reports decreasing errors and second-order trend") {
    SolverConfig cfg;
    const auto rows = convergence_study({0.1, 0.05, 0.025}, 3.0, 1.5, cfg);
    REQUIRE(rows.size() == 3);
    CHECK(!rows[0].has_order);
    CHECK(rows[1].has_order);
    CHECK(rows[1].max_error < rows[0].max_error);
    CHECK(rows[2].max_error < rows[1].max_error);
    CHECK(rows[2].observed_order > 1.4);
    CHECK(rows[2].observed_order < 2.6);
    CHECK_THROWS_AS(convergence_study({0.05, 0.1}, 3.0, 1.5, cfg), DomainError);
}

TEST_CASE("slack probe locates its own minimum") {
    const HalfStripGrid g(3.0, 1.5, 0.05);
    SolverConfig cfg;
    const GridField sol = solve_dirichlet(g, kernel_boundary(g), cfg);
    const SlackProbe probe = slack_probe(sol);
    CHECK(probe.i >= 2);
    CHECK(probe.xi == doctest::Approx(g.xi(probe.i)).epsilon(1e-15));
    const double h = g.h;
    const double recomputed =
        (3.0 * sol.at(probe.i, probe.j) - 4.0 * sol.at(probe.i - 1, probe.j) +
         sol.at(probe.i - 2, probe.j)) /
            (2.0 * h) -
        (std::exp(2.0 * probe.xi) + 1.0) / (2.0 * (std::exp(2.0 * probe.xi) - 1.0)) *
            sol.at(probe.i, probe.j);
    CHECK(probe.min_slack == doctest::Approx(recomputed).epsilon(1e-12));
    // kernel data keeps the discrete slack nonnegative up to truncation error
    CHECK(probe.min_slack >= -5e-3 * w0_kernel(3.0));
}
