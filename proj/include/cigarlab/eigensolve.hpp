#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cigarlab {

// Uniform node-centered grid on [0, xi_max] x [-x_max, x_max], spacing h on
// both axes. The xi = 0 row carries the homogeneous wall condition; the
// singular coefficient P is only ever evaluated at interior nodes.
struct HalfStripGrid {
    double xi_max = 0, x_max = 0, h = 0;
    int nxi = 0, nx = 0;  // node counts are nxi+1 and nx+1

    HalfStripGrid(double xi_max_, double x_max_, double h_);

    double xi(int i) const { return i * h; }
    double x(int j) const { return -x_max + j * h; }
    // x-major node layout: the xi index runs fastest.
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(j) * (nxi + 1) + i;
    }
    std::size_t node_count() const {
        return static_cast<std::size_t>(nxi + 1) * (nx + 1);
    }
};

struct GridField {
    HalfStripGrid grid;
    std::vector<double> values;  // one entry per node, x-major

    explicit GridField(const HalfStripGrid& g) : grid(g), values(g.node_count(), 0.0) {}
    double& at(int i, int j) { return values[grid.idx(i, j)]; }
    double at(int i, int j) const { return values[grid.idx(i, j)]; }
};

enum class SolveMethod { iterative_spd, direct_banded };

struct SolverConfig {
    double linear_tol = 1e-10;  // relative residual of the discrete system
    int max_iter = 0;           // 0 -> default 50 (nxi + nx)
    SolveMethod method = SolveMethod::iterative_spd;
    bool paper_bc = true;  // require identically zero data on the xi = 0 row
};

struct NonConvergenceError : std::runtime_error {
    double achieved = 0;
    NonConvergenceError(const std::string& what, double achieved_)
        : std::runtime_error(what), achieved(achieved_) {}
};

struct SolveStats {
    int iterations = 0;
    double residual = 0;  // achieved relative residual
    SolveMethod method = SolveMethod::iterative_spd;
};

// Matrix-free 5-point discretization of -Laplace + P with Dirichlet
// elimination; symmetric positive definite M-matrix on interior nodes.
struct DiscreteOperator {
    HalfStripGrid grid;
    int ni = 0, nj = 0;         // interior extents (xi, x)
    std::vector<double> diag;   // 4/h^2 + P(xi_i), x-major over interior nodes
    double offdiag = 0;         // -1/h^2

    explicit DiscreteOperator(const HalfStripGrid& g);
    std::size_t interior_count() const {
        return static_cast<std::size_t>(ni) * nj;
    }
    std::size_t k(int i, int j) const {  // i, j are 1-based grid indices
        return static_cast<std::size_t>(j - 1) * ni + (i - 1);
    }
    void apply(const std::vector<double>& u, std::vector<double>& out) const;
};

DiscreteOperator assemble(const HalfStripGrid& grid);

// Fill boundary nodes from a function of (xi, x); interior stays zero.
GridField boundary_from(const HalfStripGrid& grid,
                        const std::function<double(double, double)>& f);

// Solve the Dirichlet problem for the given boundary data. Deterministic:
// fixed zero start, fixed-order reductions.
GridField solve_dirichlet(const HalfStripGrid& grid, const GridField& boundary,
                          const SolverConfig& cfg, SolveStats* stats = nullptr);

struct ConvergenceRow {
    double h = 0;
    double max_error = 0;       // vs the exact kernel, coarsest nodes, xi >= 0.5
    bool has_order = false;
    double observed_order = 0;  // log2(e(2h)/e(h)) for consecutive entries
};

std::vector<ConvergenceRow> convergence_study(const std::vector<double>& h_list,
                                              double xi_max, double x_max,
                                              const SolverConfig& cfg);

struct SlackProbe {
    double min_slack = 0;
    int i = 0, j = 0;  // argmin node
    double xi = 0, x = 0;
};

// One-sided second-order xi-derivative probe of the monotonicity inequality
// at all nodes with xi >= 2h.
SlackProbe slack_probe(const GridField& W);

}  // namespace cigarlab
