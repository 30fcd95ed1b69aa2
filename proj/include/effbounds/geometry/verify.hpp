#pragma once

// Seeded property suites over the geometry module.  Trial i of a suite runs
// on Rng(seed + i); failures carry that trial seed.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace effbounds::geom {

struct TrialFailure {
  std::uint64_t seed = 0;
  std::string message;
};

struct SuiteResult {
  std::string name;
  int trials = 0;
  int passed = 0;
  double required_rate = 1.0;  // fraction of trials that must pass
  std::vector<TrialFailure> failures;
  std::vector<std::string> notes;
  double seconds = 0;

  bool ok() const { return trials > 0 && passed >= required_rate * trials; }
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::optional<int> trials;
  std::optional<int> degree;                                      // recovery: fixed curve degree
  std::optional<std::pair<std::string, std::string>> curves;      // matching: two named curves
};

const std::vector<std::string>& suite_names();
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt);  // invalid_params on an unknown name

SuiteResult recovery_suite(const SuiteOptions& opt);
SuiteResult cramer_suite(const SuiteOptions& opt);
SuiteResult matching_suite(const SuiteOptions& opt);
SuiteResult nondegeneracy_suite(const SuiteOptions& opt);
SuiteResult degree_law_suite(const SuiteOptions& opt);
SuiteResult segre_suite(const SuiteOptions& opt);

}  // namespace effbounds::geom
