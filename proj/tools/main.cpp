#include <cctype>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cigarlab/liouville.hpp"
#include "cigarlab/models.hpp"
#include "cigarlab/report.hpp"
#include "cigarlab/verify.hpp"

namespace {

using namespace cigarlab;

// exit codes: 0 all checks pass, 1 a check or computation failed, 2 usage/IO
constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

std::string join_names(const std::vector<std::string>& v) {
    std::string s;
    for (const std::string& n : v) {
        if (!s.empty()) s += "|";
        s += n;
    }
    return s;
}

int run_verify(const std::string& suite, std::uint64_t seed, double tol_scale,
               const std::string& out_path) {
    const CheckReport report = run_suite(suite, seed, tol_scale);
    const std::string json = to_json(report);
    if (!out_path.empty()) write_text_file(out_path, json);
    std::cout << json;
    return report.pass ? kOk : kCheckFailed;
}

int run_solve(double xi_max, double x_max, double h, const std::string& method,
              const std::string& out_path, const std::string& report_path) {
    const HalfStripGrid grid(xi_max, x_max, h);
    const GridField bc = boundary_from(
        grid, [](double xi, double) { return xi > 0.0 ? w0_kernel(xi) : 0.0; });
    SolverConfig cfg;
    cfg.method = method == "direct" ? SolveMethod::direct_banded : SolveMethod::iterative_spd;
    SolveStats stats;
    const GridField sol = solve_dirichlet(grid, bc, cfg, &stats);
    write_grid_csv(sol, out_path);

    double max_error = 0;
    for (int j = 0; j <= grid.nx; ++j)
        for (int i = 0; i <= grid.nxi; ++i) {
            const double xi = grid.xi(i);
            if (xi < 0.5) continue;
            max_error = std::max(max_error, std::abs(sol.at(i, j) - w0_kernel(xi)));
        }
    const SlackProbe probe = slack_probe(sol);

    std::string json;
    json += "{\n";
    json += "  \"command\": \"solve\",\n";
    json += "  \"xi_max\": " + format_double(xi_max) + ",\n";
    json += "  \"x_max\": " + format_double(x_max) + ",\n";
    json += "  \"h\": " + format_double(h) + ",\n";
    json += "  \"nodes\": " + std::to_string(grid.node_count()) + ",\n";
    json += "  \"bc\": \"w0\",\n";
    json += std::string("  \"method\": \"") + (method == "direct" ? "direct" : "cg") + "\",\n";
    json += "  \"iterations\": " + std::to_string(stats.iterations) + ",\n";
    json += "  \"achieved_residual\": " + format_double(stats.residual) + ",\n";
    json += "  \"max_error_vs_kernel\": " + format_double(max_error) + ",\n";
    json += "  \"min_slack\": " + format_double(probe.min_slack) + ",\n";
    json += "  \"min_slack_xi\": " + format_double(probe.xi) + ",\n";
    json += "  \"min_slack_x\": " + format_double(probe.x) + ",\n";
    json += std::string("  \"version\": \"") + kVersion + "\"\n";
    json += "}\n";
    if (!report_path.empty()) write_text_file(report_path, json);
    std::cout << json;
    return kOk;
}

std::vector<double> parse_at(const std::string& at) {
    std::vector<double> vals;
    std::stringstream ss(at);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        const double v = std::stod(item, &used);
        while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used])))
            ++used;
        if (used != item.size()) throw IoError("malformed coordinate: " + item);
        vals.push_back(v);
    }
    return vals;
}

std::string array1(const double* v, int n) {
    std::string s = "[";
    for (int i = 0; i < n; ++i) {
        if (i) s += ", ";
        s += format_double(v[i]);
    }
    return s + "]";
}

int run_eval(const std::string& model_id, const std::string& quantity, const std::string& at) {
    const MetricModel m = model_by_name(model_id);
    const std::vector<double> vals = parse_at(at);
    double c1 = 0, c2 = 0;
    if (static_cast<int>(vals.size()) == m.dim && m.dim != 2) {
        c1 = vals[m.active[0]];
        c2 = vals[m.active[1]];
    } else if (vals.size() == 2) {
        c1 = vals[0];
        c2 = vals[1];
    } else {
        throw IoError("--at needs 2 values (active coordinates) or one per axis");
    }
    m.require_inside(c1, c2);
    const int d = m.dim;

    std::string body;
    if (quantity == "christoffel") {
        const ChristoffelTable G = christoffel(m, c1, c2);
        body = "[";
        for (int k = 0; k < d; ++k) {
            if (k) body += ", ";
            body += "[";
            for (int i = 0; i < d; ++i) {
                if (i) body += ", ";
                body += array1(G.G[k][i], d);
            }
            body += "]";
        }
        body += "]";
    } else if (quantity == "riemann" || quantity == "ricci" || quantity == "sectional") {
        const CurvatureRecord cr = curvature(m, c1, c2);
        if (quantity == "riemann") {
            body = "[";
            for (int l = 0; l < d; ++l) {
                if (l) body += ", ";
                body += "[";
                for (int i = 0; i < d; ++i) {
                    if (i) body += ", ";
                    body += "[";
                    for (int j = 0; j < d; ++j) {
                        if (j) body += ", ";
                        body += array1(cr.riem[l][i][j], d);
                    }
                    body += "]";
                }
                body += "]";
            }
            body += "]";
        } else {
            body = "[";
            for (int i = 0; i < d; ++i) {
                if (i) body += ", ";
                body += array1(quantity == "ricci" ? cr.ricci[i] : cr.K[i], d);
            }
            body += "]";
        }
    } else if (quantity == "soliton-residual") {
        const SolitonResidual sr = soliton_residual(m, c1, c2);
        body = "{\"eq_residual\": " + format_double(sr.eq_residual) +
               ", \"bianchi_residual\": " + format_double(sr.bianchi_residual) + "}";
    } else if (quantity == "gauss") {
        body = format_double(gauss_curvature(m, c1, c2));
    } else {
        throw IoError("unknown quantity: " + quantity);
    }

    std::string json;
    json += "{\n";
    json += "  \"model\": \"" + m.name + "\",\n";
    json += "  \"at\": {\"" + m.axes[m.active[0]] + "\": " + format_double(c1) + ", \"" +
            m.axes[m.active[1]] + "\": " + format_double(c2) + "},\n";
    json += "  \"quantity\": \"" + quantity + "\",\n";
    json += "  \"values\": " + body + ",\n";
    json += std::string("  \"version\": \"") + kVersion + "\"\n";
    json += "}\n";
    std::cout << json;
    return kOk;
}

// Transforms need exact derivative jets of the field, which sampled values
// cannot supply; inputs are therefore restricted to rows naming one of the
// built-in fields in a `fixture` column.
VariationField fixture_field(const std::string& name) {
    if (name == "zero") {
        VariationField f;
        f.V = [](double, double) { return Jet2{}; };
        return f;
    }
    if (name == "gauge") return gauge_variation([](double) { return Jet1::constant(1.0); });
    if (name == "vlog") return v_log_field();
    if (name == "vdagger") return v_dagger_field(0.0);
    throw IoError("unknown fixture field: " + name +
                  " (expected zero|gauge|vlog|vdagger)");
}

int run_transform(const std::string& grid_path, const std::string& direction,
                  const std::string& out_path) {
    const CsvTable table = read_csv(grid_path);
    const int ci = table.column("xi");
    const int cj = table.column("x");
    const int cf = table.column("fixture");
    if (ci < 0 || cj < 0)
        throw IoError("transform input needs xi and x columns");
    if (cf < 0)
        throw IoError("transform input must name a built-in field in a fixture column; "
                      "free-form sampled data cannot be transformed");
    if (table.rows.empty()) throw IoError("transform input has no data rows");
    const std::string name = table.rows.front()[cf];
    for (const auto& row : table.rows)
        if (row[cf] != name)
            throw IoError("transform input mixes fixture names");
    const VariationField f = fixture_field(name);
    const ScalarField2 Y = Y_from_V(f);

    std::string out = "xi,x,value\n";
    for (const auto& row : table.rows) {
        const double xi = std::stod(row[ci]);
        const double x = std::stod(row[cj]);
        double value = 0;
        if (direction == "v2y") {
            value = Y(xi, x).v;
        } else if (direction == "y2w") {
            value = W_from_Y(Y, xi, x);
        } else if (direction == "v2w") {
            value = W_from_V(f, r_of_xi(xi), x);
        } else {
            throw IoError("unknown direction: " + direction);
        }
        out += format_double(xi) + "," + format_double(x) + "," + format_double(value) + "\n";
    }
    write_text_file(out_path, out);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification workbench for the linearized cigar soliton geometry"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);
    // long-form flags only; the default -h short alias would shadow solve --h
    app.set_help_flag("--help", "print help and exit");

    std::string suite = "all";
    std::uint64_t seed = 42;
    double tol_scale = 1.0;
    std::string verify_out;
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "suite: " + join_names(suite_names()))
        ->check(CLI::IsMember(suite_names()));
    verify->add_option("--seed", seed, "random fixture seed");
    verify->add_option("--tol-scale", tol_scale, "multiply every check tolerance")
        ->check(CLI::PositiveNumber);
    verify->add_option("--out", verify_out, "also write the report to this path");

    double xi_max = 6.0, x_max = 4.0, h = 0.05;
    std::string bc = "w0", method = "cg";
    std::string solve_out, solve_report;
    CLI::App* solve = app.add_subcommand("solve", "solve the half-strip Dirichlet problem");
    solve->add_option("--xi-max", xi_max, "strip depth")->check(CLI::PositiveNumber);
    solve->add_option("--x-max", x_max, "strip half-width")->check(CLI::PositiveNumber);
    solve->add_option("--h", h, "grid spacing")->check(CLI::PositiveNumber);
    solve->add_option("--bc", bc, "boundary data (w0: exact kernel trace)")
        ->check(CLI::IsMember({"w0"}));
    solve->add_option("--method", method, "linear solver")
        ->check(CLI::IsMember({"cg", "direct"}));
    solve->add_option("--out", solve_out, "output grid CSV path")->required();
    solve->add_option("--report", solve_report, "also write the solve report to this path");

    std::string model_id, quantity, at;
    CLI::App* eval = app.add_subcommand("eval", "evaluate a geometric quantity at a point");
    eval->add_option("--model", model_id, "cigar2d|cigar3d|sigma|appendix-demo")
        ->required()
        ->check(CLI::IsMember({"cigar2d", "cigar3d", "sigma", "appendix-demo"}));
    eval->add_option("--quantity", quantity,
                     "christoffel|riemann|ricci|sectional|soliton-residual|gauss")
        ->required()
        ->check(CLI::IsMember(
            {"christoffel", "riemann", "ricci", "sectional", "soliton-residual", "gauss"}));
    eval->add_option("--at", at, "comma-separated coordinates c1,c2[,c3]")->required();

    std::string grid_path, direction, transform_out;
    CLI::App* transform =
        app.add_subcommand("transform", "map a named field between presentations");
    transform->add_option("--grid", grid_path, "input CSV with xi, x, fixture columns")
        ->required();
    transform->add_option("--direction", direction, "v2y|y2w|v2w")
        ->required()
        ->check(CLI::IsMember({"v2y", "y2w", "v2w"}));
    transform->add_option("--out", transform_out, "output grid CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (app.got_subcommand(verify)) return run_verify(suite, seed, tol_scale, verify_out);
        if (app.got_subcommand(solve)) return run_solve(xi_max, x_max, h, method, solve_out, solve_report);
        if (app.got_subcommand(eval)) return run_eval(model_id, quantity, at);
        if (app.got_subcommand(transform))
            return run_transform(grid_path, direction, transform_out);
    } catch (const NonConvergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCheckFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
