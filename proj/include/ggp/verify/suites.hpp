#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ggp/numeric_core.hpp"

namespace ggp::verify {

struct SuiteResult {
  std::string name;
  bool passed = false;
  int cases = 0;
  double max_error = 0.0;
  double threshold = 0.0;
  std::string detail;
  std::vector<std::pair<std::string, double>> values;  // named diagnostics, in insertion order
};

inline constexpr std::uint64_t kDefaultSeed = 20240611;

SuiteResult three_point_identity(std::uint64_t seed, int count = 500);
SuiteResult gauge_invariance(std::uint64_t seed, int count = 100, std::size_t K = 400);
SuiteResult stokes_equivalence(const Tolerance& tol = {});
SuiteResult identity_reduction(std::uint64_t seed, int count = 50);
SuiteResult kahler_fd(std::uint64_t seed, int count = 200, const Tolerance& tol = {});
SuiteResult two_state_closed_forms();
SuiteResult trace_split_identity(std::uint64_t seed, int count = 500);
SuiteResult distance_identity(std::uint64_t seed, int count = 500);
SuiteResult cross_method(std::size_t K = 1000, int M = 64, const Tolerance& tol = {});

/// Every suite above, in a fixed order. Each suite derives its own stream from
/// `seed`, so results do not depend on which other suites ran.
std::vector<SuiteResult> run_all(std::uint64_t seed, const Tolerance& tol = {});

}  // namespace ggp::verify
