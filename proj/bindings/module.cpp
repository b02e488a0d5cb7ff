#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cigarlab/liouville.hpp"
#include "cigarlab/models.hpp"
#include "cigarlab/report.hpp"
#include "cigarlab/verify.hpp"

namespace py = pybind11;
using namespace cigarlab;

namespace {

VariationField fixture_field(const std::string& name) {
    if (name == "zero") {
        VariationField f;
        f.V = [](double, double) { return Jet2{}; };
        return f;
    }
    if (name == "gauge") return gauge_variation([](double) { return Jet1::constant(1.0); });
    if (name == "vlog") return v_log_field();
    if (name == "vdagger") return v_dagger_field(0.0);
    throw DomainError("unknown fixture field: " + name);
}

std::vector<std::vector<std::vector<double>>> christoffel_list(const std::string& model,
                                                               double c1, double c2) {
    const MetricModel m = model_by_name(model);
    const ChristoffelTable G = christoffel(m, c1, c2);
    const int d = m.dim;
    std::vector<std::vector<std::vector<double>>> out(
        d, std::vector<std::vector<double>>(d, std::vector<double>(d)));
    for (int k = 0; k < d; ++k)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) out[k][i][j] = G.G[k][i][j];
    return out;
}

std::vector<std::vector<double>> matrix_quantity(const std::string& model,
                                                 const std::string& quantity, double c1,
                                                 double c2) {
    const MetricModel m = model_by_name(model);
    const CurvatureRecord cr = curvature(m, c1, c2);
    const int d = m.dim;
    std::vector<std::vector<double>> out(d, std::vector<double>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            if (quantity == "ricci")
                out[i][j] = cr.ricci[i][j];
            else if (quantity == "sectional")
                out[i][j] = cr.K[i][j];
            else
                throw DomainError("unknown matrix quantity: " + quantity);
        }
    return out;
}

py::dict solve_w0(double xi_max, double x_max, double h, const std::string& method) {
    const HalfStripGrid grid(xi_max, x_max, h);
    const GridField bc = boundary_from(
        grid, [](double xi, double) { return xi > 0.0 ? w0_kernel(xi) : 0.0; });
    SolverConfig cfg;
    cfg.method = method == "direct" ? SolveMethod::direct_banded : SolveMethod::iterative_spd;
    SolveStats stats;
    const GridField sol = solve_dirichlet(grid, bc, cfg, &stats);
    double max_error = 0;
    for (int j = 0; j <= grid.nx; ++j)
        for (int i = 0; i <= grid.nxi; ++i) {
            if (grid.xi(i) < 0.5) continue;
            max_error = std::max(max_error, std::abs(sol.at(i, j) - w0_kernel(grid.xi(i))));
        }
    const SlackProbe probe = slack_probe(sol);
    py::dict out;
    out["nxi"] = grid.nxi;
    out["nx"] = grid.nx;
    out["h"] = grid.h;
    out["values"] = sol.values;  // x-major, xi index fastest
    out["iterations"] = stats.iterations;
    out["residual"] = stats.residual;
    out["max_error_vs_kernel"] = max_error;
    out["min_slack"] = probe.min_slack;
    return out;
}

std::vector<double> transform_fixture(const std::string& fixture, const std::string& direction,
                                      const std::vector<std::pair<double, double>>& points) {
    const VariationField f = fixture_field(fixture);
    const ScalarField2 Y = Y_from_V(f);
    std::vector<double> out;
    out.reserve(points.size());
    for (const auto& [xi, x] : points) {
        if (direction == "v2y")
            out.push_back(Y(xi, x).v);
        else if (direction == "y2w")
            out.push_back(W_from_Y(Y, xi, x));
        else if (direction == "v2w")
            out.push_back(W_from_V(f, r_of_xi(xi), x));
        else
            throw DomainError("unknown direction: " + direction);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "verification workbench for the linearized cigar soliton geometry";
    m.attr("__version__") = kVersion;

    m.def("suite_names", [] { return suite_names(); });
    m.def(
        "run_suite_json",
        [](const std::string& suite, std::uint64_t seed, double tol_scale) {
            return to_json(run_suite(suite, seed, tol_scale));
        },
        py::arg("suite"), py::arg("seed") = 42, py::arg("tol_scale") = 1.0,
        "Run a verification suite and return the JSON report");

    m.def("xi_of_r", &xi_of_r, py::arg("r"));
    m.def("r_of_xi", &r_of_xi, py::arg("xi"));
    m.def("w0_kernel", &w0_kernel, py::arg("xi"));
    m.def("P_coeff", &P_coeff, py::arg("xi"));
    m.def("Q_coeff", &Q_coeff, py::arg("xi"));
    m.def("multiplier_r", &multiplier_r, py::arg("r"));
    m.def("lambda_r", &lambda_r, py::arg("r"));

    m.def("christoffel", &christoffel_list, py::arg("model"), py::arg("c1"), py::arg("c2"));
    m.def("ricci",
          [](const std::string& model, double c1, double c2) {
              return matrix_quantity(model, "ricci", c1, c2);
          },
          py::arg("model"), py::arg("c1"), py::arg("c2"));
    m.def("sectional",
          [](const std::string& model, double c1, double c2) {
              return matrix_quantity(model, "sectional", c1, c2);
          },
          py::arg("model"), py::arg("c1"), py::arg("c2"));
    m.def("gauss",
          [](const std::string& model, double c1, double c2) {
              return gauss_curvature(model_by_name(model), c1, c2);
          },
          py::arg("model"), py::arg("c1"), py::arg("c2"));
    m.def("soliton_residual",
          [](const std::string& model, double c1, double c2) {
              const SolitonResidual sr = soliton_residual(model_by_name(model), c1, c2);
              return std::make_pair(sr.eq_residual, sr.bianchi_residual);
          },
          py::arg("model"), py::arg("c1"), py::arg("c2"));

    m.def("solve_w0", &solve_w0, py::arg("xi_max") = 6.0, py::arg("x_max") = 4.0,
          py::arg("h") = 0.05, py::arg("method") = "cg",
          "Solve the half-strip Dirichlet problem with the exact-kernel trace");
    m.def("transform_fixture", &transform_fixture, py::arg("fixture"), py::arg("direction"),
          py::arg("points"),
          "Map a named built-in field between presentations at the given (xi, x) points");

    py::register_exception<DomainError>(m, "DomainError");
    py::register_exception<NonConvergenceError>(m, "NonConvergenceError");
}
