#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace finspinor {

/// How a suite's observed value must relate to its bound to pass.
enum class Relation { AtMost, Above };

/// Outcome of one property suite at one dimension. `value` is the worst
/// observed deviation (AtMost) or the smallest observed separation (Above).
struct SuiteResult {
  std::string suite;
  int n = 0;
  double value = 0.0;
  double bound = 0.0;
  Relation relation = Relation::AtMost;
  bool pass = false;
};

/// Runs every module property suite for N = 2..n_max. Sampling is fully
/// deterministic in (n_max, seed, samples). n_max must lie in 2..5 and
/// samples must be >= 1; throws DomainError otherwise.
std::vector<SuiteResult> run_verification(int n_max, std::uint64_t seed, int samples);

/// Fixed-width pass/fail table, one row per suite, plus a summary line.
void print_report(const std::vector<SuiteResult>& results, std::ostream& out);

bool all_passed(const std::vector<SuiteResult>& results);

}  // namespace finspinor
