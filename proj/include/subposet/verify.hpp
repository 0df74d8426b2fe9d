#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace subposet {

struct VerifyConfig {
  /// Interval-chain widths; empty means the suite default.
  std::vector<unsigned> k_grid;
  /// Largest ground set; 0 means the suite default.
  unsigned n_max = 0;
  /// Recursion depth for the exponent suite.
  std::size_t steps = 64;
  /// Random instances / samples; 0 means the suite default.
  std::size_t samples = 0;
  std::uint64_t seed = 20160101;
  /// Solver threads (0 = SUBPOSET_LAB_THREADS).
  unsigned threads = 0;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool pass() const;
  /// Deterministic text rendering; carries no timings or node counts.
  std::string render() const;
};

/// levelsize, unrelated, worstset, permutation, doublecount, greedy,
/// theorem3, sperner, identities, corollary, witness, recursion.
const std::vector<std::string>& suite_names();

/// Throws InvalidParams for an unknown suite.
SuiteReport run_suite(const std::string& name, const VerifyConfig& cfg);

}  // namespace subposet
