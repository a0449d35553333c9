#pragma once

#include <string_view>
#include <vector>

#include "spinh/report.hpp"

namespace spinh {

/// Suites: "clifford", "lemmas", "spectral", "scalar", or "all" (the first
/// three). Throws std::invalid_argument for other names.
std::vector<CheckResult> run_suite(const CaseSpec& c, std::string_view suite, double tol);

}  // namespace spinh
