#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cigarlab/eigensolve.hpp"

namespace cigarlab {

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr const char* kVersion = "1.0.0";

struct CheckResult {
    std::string id;
    std::string description;
    std::int64_t samples = 0;
    double max_abs_residual = 0;
    double max_rel_residual = 0;
    double tolerance = 0;
    bool pass = false;
};

struct CheckReport {
    std::string suite;
    std::vector<CheckResult> checks;  // kept sorted by id
    bool pass = false;
    std::uint64_t seed = 0;
    std::string version = kVersion;
    double tol_scale = 1.0;

    void finalize();  // sorts by id and recomputes the conjunction
};

// Shortest-round-trip float formatting ("%.17g"), deterministic key order.
std::string format_double(double v);
std::string to_json(const CheckReport& report);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

// CSV grid: header "xi,x,value", LF endings, x-major rows.
void write_grid_csv(const GridField& field, const std::string& path);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    int column(const std::string& name) const;  // -1 when absent
};

CsvTable read_csv(const std::string& path);

}  // namespace cigarlab
