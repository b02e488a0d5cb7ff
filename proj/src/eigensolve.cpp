#include "cigarlab/eigensolve.hpp"

#include <cmath>

#include "cigarlab/liouville.hpp"

namespace cigarlab {

namespace {

int checked_divisions(double length, double h, const char* what) {
    const double q = length / h;
    const int n = static_cast<int>(std::lround(q));
    if (n <= 0 || std::abs(q - n) > 1e-9 * q)
        throw DomainError(std::string(what) + " must be an integer multiple of h");
    return n;
}

}  // namespace

HalfStripGrid::HalfStripGrid(double xi_max_, double x_max_, double h_)
    : xi_max(xi_max_), x_max(x_max_), h(h_) {
    if (!(xi_max > 0 && x_max > 0 && h > 0))
        throw DomainError("grid extents and spacing must be positive");
    nxi = checked_divisions(xi_max, h, "xi_max");
    nx = checked_divisions(2.0 * x_max, h, "2 x_max");
    if (nxi < 8 || nx < 8) throw DomainError("grid must have at least 8 cells per axis");
}

DiscreteOperator::DiscreteOperator(const HalfStripGrid& g) : grid(g) {
    ni = g.nxi - 1;
    nj = g.nx - 1;
    offdiag = -1.0 / (g.h * g.h);
    diag.resize(interior_count());
    for (int j = 1; j <= nj; ++j)
        for (int i = 1; i <= ni; ++i)
            diag[k(i, j)] = 4.0 / (g.h * g.h) + P_coeff(g.xi(i));
}

void DiscreteOperator::apply(const std::vector<double>& u, std::vector<double>& out) const {
    out.assign(interior_count(), 0.0);
    for (int j = 1; j <= nj; ++j) {
        for (int i = 1; i <= ni; ++i) {
            const std::size_t c = k(i, j);
            double acc = diag[c] * u[c];
            if (i > 1) acc += offdiag * u[c - 1];
            if (i < ni) acc += offdiag * u[c + 1];
            if (j > 1) acc += offdiag * u[c - ni];
            if (j < nj) acc += offdiag * u[c + ni];
            out[c] = acc;
        }
    }
}

DiscreteOperator assemble(const HalfStripGrid& grid) { return DiscreteOperator(grid); }

GridField boundary_from(const HalfStripGrid& grid,
                        const std::function<double(double, double)>& f) {
    GridField g(grid);
    for (int j = 0; j <= grid.nx; ++j) {
        g.at(0, j) = f(grid.xi(0), grid.x(j));
        g.at(grid.nxi, j) = f(grid.xi(grid.nxi), grid.x(j));
    }
    for (int i = 0; i <= grid.nxi; ++i) {
        g.at(i, 0) = f(grid.xi(i), grid.x(0));
        g.at(i, grid.nx) = f(grid.xi(i), grid.x(grid.nx));
    }
    return g;
}

namespace {

std::vector<double> build_rhs(const DiscreteOperator& op, const GridField& bc) {
    const double s = -op.offdiag;  // 1/h^2
    std::vector<double> b(op.interior_count(), 0.0);
    for (int j = 1; j <= op.nj; ++j) {
        for (int i = 1; i <= op.ni; ++i) {
            double acc = 0.0;
            if (i == 1) acc += s * bc.at(0, j);
            if (i == op.ni) acc += s * bc.at(op.grid.nxi, j);
            if (j == 1) acc += s * bc.at(i, 0);
            if (j == op.nj) acc += s * bc.at(i, op.grid.nx);
            b[op.k(i, j)] = acc;
        }
    }
    return b;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    // Fixed-order sequential reduction: bitwise reproducible.
    double s = 0.0;
    for (std::size_t t = 0; t < a.size(); ++t) s += a[t] * b[t];
    return s;
}

std::vector<double> cg_solve(const DiscreteOperator& op, const std::vector<double>& b,
                             double tol, int max_iter, SolveStats* stats) {
    const std::size_t n = b.size();
    std::vector<double> u(n, 0.0);  // fixed zero start
    const double bnorm = std::sqrt(dot(b, b));
    if (stats) stats->iterations = 0;
    if (bnorm == 0.0) {
        if (stats) stats->residual = 0.0;
        return u;
    }
    std::vector<double> r = b, z(n), p(n), Ap(n);
    for (std::size_t t = 0; t < n; ++t) z[t] = r[t] / op.diag[t];  // Jacobi
    p = z;
    double rz = dot(r, z);
    int it = 0;
    double rel = 1.0;
    for (; it < max_iter; ++it) {
        rel = std::sqrt(dot(r, r)) / bnorm;
        if (rel <= tol) break;
        op.apply(p, Ap);
        const double alpha = rz / dot(p, Ap);
        for (std::size_t t = 0; t < n; ++t) u[t] += alpha * p[t];
        for (std::size_t t = 0; t < n; ++t) r[t] -= alpha * Ap[t];
        for (std::size_t t = 0; t < n; ++t) z[t] = r[t] / op.diag[t];
        const double rz_next = dot(r, z);
        const double beta = rz_next / rz;
        rz = rz_next;
        for (std::size_t t = 0; t < n; ++t) p[t] = z[t] + beta * p[t];
    }
    rel = std::sqrt(dot(r, r)) / bnorm;
    if (stats) {
        stats->iterations = it;
        stats->residual = rel;
    }
    if (rel > tol)
        throw NonConvergenceError("iterative solver exhausted its budget at relative residual "
                                      + std::to_string(rel),
                                  rel);
    return u;
}

// Banded Cholesky, packed lower band, half-bandwidth = interior xi-count.
std::vector<double> banded_solve(const DiscreteOperator& op, const std::vector<double>& b,
                                 SolveStats* stats) {
    const std::size_t n = b.size();
    const std::size_t bw = static_cast<std::size_t>(op.ni);  // j-neighbor offset
    std::vector<double> band((bw + 1) * n, 0.0);             // band[d*n + r] = A(r, r-d)
    for (int j = 1; j <= op.nj; ++j) {
        for (int i = 1; i <= op.ni; ++i) {
            const std::size_t rrow = op.k(i, j);
            band[rrow] = op.diag[rrow];
            if (i > 1) band[1 * n + rrow] = op.offdiag;
            if (j > 1) band[bw * n + rrow] = op.offdiag;
        }
    }
    // In-place factorization A = L L^T within the band.
    for (std::size_t c = 0; c < n; ++c) {
        double d = band[c];
        for (std::size_t d2 = 1; d2 <= bw && d2 <= c; ++d2) {
            const double l = band[d2 * n + c];
            d -= l * l;
        }
        if (d <= 0.0) throw DomainError("discrete operator lost positive definiteness");
        const double lcc = std::sqrt(d);
        band[c] = lcc;
        const std::size_t rmax = std::min(n - 1, c + bw);
        for (std::size_t rrow = c + 1; rrow <= rmax; ++rrow) {
            double acc = band[(rrow - c) * n + rrow];
            // overlap of bands of rows rrow and c
            for (std::size_t d2 = rrow - c + 1; d2 <= bw && d2 <= rrow; ++d2) {
                const std::size_t cc = rrow - d2;
                const std::size_t dc = c - cc;
                if (dc > bw) continue;
                acc -= band[d2 * n + rrow] * band[dc * n + c];
            }
            band[(rrow - c) * n + rrow] = acc / lcc;
        }
    }
    // Forward then backward substitution.
    std::vector<double> y(n);
    for (std::size_t rrow = 0; rrow < n; ++rrow) {
        double acc = b[rrow];
        for (std::size_t d2 = 1; d2 <= bw && d2 <= rrow; ++d2)
            acc -= band[d2 * n + rrow] * y[rrow - d2];
        y[rrow] = acc / band[rrow];
    }
    std::vector<double> u(n);
    for (std::size_t t = n; t-- > 0;) {
        double acc = y[t];
        const std::size_t rmax = std::min(n - 1, t + bw);
        for (std::size_t rrow = t + 1; rrow <= rmax; ++rrow)
            acc -= band[(rrow - t) * n + rrow] * u[rrow];
        u[t] = acc / band[t];
    }
    if (stats) stats->iterations = 1;
    return u;
}

}  // namespace

GridField solve_dirichlet(const HalfStripGrid& grid, const GridField& boundary,
                          const SolverConfig& cfg, SolveStats* stats) {
    if (!(cfg.linear_tol > 0 && cfg.linear_tol <= 1e-4))
        throw DomainError("linear tolerance must lie in (0, 1e-4]");
    if (cfg.paper_bc) {
        for (int j = 0; j <= grid.nx; ++j)
            if (boundary.at(0, j) != 0.0)
                throw DomainError("wall row data must vanish identically");
    }
    for (double v : boundary.values)
        if (!std::isfinite(v)) throw DomainError("boundary data must be finite");

    const DiscreteOperator op = assemble(grid);
    const std::vector<double> b = build_rhs(op, boundary);
    const int max_iter = cfg.max_iter > 0 ? cfg.max_iter : 50 * (grid.nxi + grid.nx);

    SolveStats local;
    local.method = cfg.method;
    std::vector<double> u;
    if (cfg.method == SolveMethod::iterative_spd)
        u = cg_solve(op, b, cfg.linear_tol, max_iter, &local);
    else
        u = banded_solve(op, b, &local);
    if (stats) *stats = local;

    GridField out = boundary;
    for (int j = 1; j <= op.nj; ++j)
        for (int i = 1; i <= op.ni; ++i) out.at(i, j) = u[op.k(i, j)];
    return out;
}

std::vector<ConvergenceRow> convergence_study(const std::vector<double>& h_list,
                                              double xi_max, double x_max,
                                              const SolverConfig& cfg) {
    if (h_list.empty()) return {};
    for (std::size_t t = 1; t < h_list.size(); ++t)
        if (!(h_list[t] < h_list[t - 1]))
            throw DomainError("spacings must be strictly decreasing");

    const HalfStripGrid coarse(xi_max, x_max, h_list[0]);
    std::vector<ConvergenceRow> rows;
    for (double h : h_list) {
        const HalfStripGrid grid(xi_max, x_max, h);
        const int ratio = checked_divisions(h_list[0], h, "coarse spacing");
        const GridField bc = boundary_from(
            grid, [](double xi, double) { return xi > 0 ? w0_kernel(xi) : 0.0; });
        const GridField sol = solve_dirichlet(grid, bc, cfg);
        double err = 0.0;
        for (int J = 0; J <= coarse.nx; ++J) {
            for (int I = 0; I <= coarse.nxi; ++I) {
                const double xi = coarse.xi(I);
                if (xi < 0.5) continue;
                const double diff =
                    std::abs(sol.at(I * ratio, J * ratio) - w0_kernel(xi));
                if (diff > err) err = diff;
            }
        }
        ConvergenceRow row;
        row.h = h;
        row.max_error = err;
        if (!rows.empty()) {
            row.has_order = true;
            row.observed_order = std::log2(rows.back().max_error / err);
        }
        rows.push_back(row);
    }
    return rows;
}

SlackProbe slack_probe(const GridField& W) {
    const HalfStripGrid& g = W.grid;
    SlackProbe probe;
    bool first = true;
    for (int j = 0; j <= g.nx; ++j) {
        for (int i = 2; i <= g.nxi; ++i) {
            const double dW =
                (3.0 * W.at(i, j) - 4.0 * W.at(i - 1, j) + W.at(i - 2, j)) / (2.0 * g.h);
            const double xi = g.xi(i);
            const double e2 = std::exp(2.0 * xi);
            const double slack = dW - (e2 + 1.0) / (2.0 * (e2 - 1.0)) * W.at(i, j);
            if (first || slack < probe.min_slack) {
                probe.min_slack = slack;
                probe.i = i;
                probe.j = j;
                probe.xi = xi;
                probe.x = g.x(j);
                first = false;
            }
        }
    }
    return probe;
}

}  // namespace cigarlab
