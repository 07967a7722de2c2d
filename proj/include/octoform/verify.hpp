#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace octoform {

/// One acceptance check: a pinned expected-value/tolerance verification.
struct CheckResult {
  int number = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

inline constexpr int acceptance_check_count = 13;

/// Runs the full acceptance suite (13 checks) with the given seed for the
/// randomized parts. Deterministic for a fixed seed.
std::vector<CheckResult> run_acceptance_suite(unsigned long seed = 0);

/// Runs one check by number (1-based); throws std::out_of_range otherwise.
CheckResult run_acceptance_check(int number, unsigned long seed = 0);

/// JSON rendering; wall times are intentionally omitted so identical inputs
/// and seed produce byte-identical reports.
nlohmann::json acceptance_to_json(const std::vector<CheckResult>& results);

} // namespace octoform
