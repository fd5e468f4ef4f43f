#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "ggp/numeric_core.hpp"
#include "ggp/verify/suites.hpp"

namespace ggp::cli {

enum ExitCode : int { kOk = 0, kValidation = 2, kNumerical = 3, kVerifyFailed = 4 };

struct JobSpec {
  std::string command;      // classify | phase | triangle | metric-grid | stokes | verify
  std::string input_path;   // JSON input; optional for metric-grid, stokes, verify
  std::string output_path;  // report destination; stdout when empty
  Tolerance tol;
  std::uint64_t seed = verify::kDefaultSeed;
  std::optional<int> resolution;
  int sign = 1;
  std::string preset = "hyperboloid-cap";  // stokes only
  double radius = 0.8;                     // stokes hyperboloid-cap only
};

/// Companion CSV path for metric-grid: foo.json -> foo.csv, anything else gets ".csv" appended.
std::string csv_path_for(const std::string& output_path);

/// Runs one job and writes its JSON report to job.output_path (or `out`).
/// Diagnostics for failures go into the report's "errors" array.
int run(const JobSpec& job, std::ostream& out);

}  // namespace ggp::cli
