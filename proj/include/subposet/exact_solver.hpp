#pragma once

#include "subposet/arith.hpp"
#include "subposet/embedding.hpp"
#include "subposet/family.hpp"
#include "subposet/poset.hpp"

#include <cstdint>
#include <string>

namespace subposet {

enum class Objective { Cardinality, Lubell };

std::string to_string(Objective o);
Objective parse_objective(const std::string& text);

/// Largest ground set la_exact / lubell_max accept without an override.
inline constexpr unsigned kExactGuardN = 7;

struct SolverOptions {
  Mode mode = Mode::Weak;
  Objective objective = Objective::Cardinality;
  /// Branch-and-bound node cap; 0 disables it. A capped search runs on one thread.
  std::uint64_t node_budget = 0;
  /// Worker threads; 0 reads SUBPOSET_LAB_THREADS and falls back to 1.
  unsigned threads = 0;
  /// Lets la_exact / lubell_max run above kExactGuardN.
  bool allow_large_n = false;
};

/// Worker count from SUBPOSET_LAB_THREADS (at least 1).
unsigned default_thread_count();

struct ExtremalResult {
  /// Cardinality, or the exact Lubell value.
  Rational value;
  /// Lexicographically least optimum in canonical order.
  SetFamily witness;
  Mode mode = Mode::Weak;
  Objective objective = Objective::Cardinality;
  /// False when the node budget ran out; value is then a lower bound.
  bool exhaustive = true;
  std::uint64_t nodes_explored = 0;
};

/// Largest (or Lubell-heaviest) subfamily of `host` with no copy of `pattern`.
ExtremalResult alpha(const SetFamily& host, const Poset& pattern, const SolverOptions& opts = {});

/// La(n, P) (weak) or La^#(n, P) (induced). Refuses n above the guard
/// unless allow_large_n is set.
ExtremalResult la_exact(unsigned n, const Poset& pattern, const SolverOptions& opts = {});

/// Maximum Lubell value over P-free families of 2^[n] (induced by default).
ExtremalResult lubell_max(unsigned n, const Poset& pattern, SolverOptions opts = {});

/// max over n <= max_n of La^#(n, P) / binom(n, floor(n/2)).
Rational estimate_induced_constant(const Poset& pattern, unsigned max_n);

/// Plain enumeration of all 2^|host| subfamilies; for cross-checks on small hosts.
ExtremalResult alpha_exhaustive(const SetFamily& host, const Poset& pattern, Mode mode,
                                Objective objective);

/// Both sides of the permutation double count for a P-free family.
struct DoubleCountingReport {
  /// Sum over A in the family of N_{|A|} / binom(n, |A|).
  Rational weighted_sum;
  Rational alpha;
  bool inequality_holds = false;
  bool exhaustive = false;
  /// Sum over the family of N_{|A|} |A|! (n-|A|)!.
  BigInt pairs_closed_form;
  /// Number of pairs (A, pi) with A in host^pi, counted over all of S_n.
  BigInt pairs_enumerated;
  /// Largest |family ∩ host^pi| seen over S_n.
  std::size_t max_intersection = 0;
  bool identity_holds = false;
};

/// Throws PFreenessViolated when `family` contains the pattern. The
/// permutation walk runs when n <= 6.
DoubleCountingReport verify_double_counting(const SetFamily& host, const Poset& pattern,
                                            const SetFamily& family, Mode mode = Mode::Weak);

}  // namespace subposet
