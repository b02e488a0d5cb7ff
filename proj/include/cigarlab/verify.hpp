#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cigarlab/report.hpp"

namespace cigarlab {

// Verification suites: geometry, variation, liouville, appendix, solver, all.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// Run every check of the suite. Deterministic for fixed (suite, seed,
// tol_scale): each check draws from its own RNG stream derived from the seed
// and the check id, so membership in `all` does not change per-check results.
CheckReport run_suite(const std::string& suite, std::uint64_t seed, double tol_scale);

}  // namespace cigarlab
