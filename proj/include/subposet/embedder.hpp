#pragma once

#include "subposet/embedding.hpp"
#include "subposet/family.hpp"
#include "subposet/poset.hpp"

#include <cstddef>
#include <vector>

namespace subposet {

/// One antichain placement of the greedy embedding.
struct GreedyStep {
  /// Mirsky layer index i (1-based).
  std::size_t layer = 0;
  /// H_i, in the total order.
  std::vector<Subset> images;
  /// I_i: members not properly contained in every image placed so far.
  /// Empty for the last step (layer 1), which removes nothing.
  SetFamily removed;
  /// |I_i \ (H_i ∪ I_{i+1})|.
  std::size_t newly_removed = 0;
};

struct GreedyTrace {
  /// The host in the placement order: larger sets first; within a size,
  /// indicator strings ascending with the worst set of that size last.
  std::vector<Subset> total_order;
  /// From layer h down to layer 1.
  std::vector<GreedyStep> steps;
  /// |⋃ H_i ∪ ⋃_{i>=2} I_i|.
  std::size_t consumed = 0;
  /// (3k-5) 2^{k-2}.
  std::size_t removal_cap = 0;
  /// |P| + (h-1)(3k-5)2^{k-2}.
  std::size_t threshold = 0;
};

struct GreedyResult {
  Embedding embedding;
  GreedyTrace trace;
};

/// |P| + (h-1)(3k-5)2^{k-2}.
std::size_t greedy_threshold(const Poset& p, unsigned k);

/// Places the Mirsky layers of p into `host` from the top layer down, each
/// on the earliest still-available sets of the total order. `host` must be
/// a subfamily of C_k^0 with member sizes in [3k-3, n-k+1] and at least
/// greedy_threshold(p, k) members (PreconditionViolated otherwise). Every
/// step re-checks the removal cap; a breach raises InternalExhaustion.
GreedyResult greedy_embed(const SetFamily& host, const Poset& p, unsigned k);

/// The ordering used by greedy_embed.
std::vector<Subset> greedy_total_order(const SetFamily& host, unsigned k);

/// A -> {1..3k-3} ∪ {a + 3k - 3 : a in A}, over [n + 4k - 4].
SetFamily shift_into_interior(const SetFamily& fam, unsigned k);
Subset shift_into_interior(const Subset& s, unsigned k);

/// All subsets of [n] whose sizes fill a centered window of `levels`
/// consecutive sizes; the window starts at floor((n - levels + 1) / 2).
SetFamily middle_levels_family(unsigned n, unsigned levels);

/// Levels used by the lower-bound witness for K_{a,...,a} with h levels:
/// (h-2) log2 a, defined when a is a power of two.
unsigned witness_levels(std::size_t a, std::size_t h);

struct SpanCertificate {
  std::size_t width = 0;   // a
  std::size_t height = 0;  // h
  /// U_1..U_{h-1}: union of the images of each of the lower h-1 levels.
  std::vector<Subset> unions;
  /// max image size - min image size + 1.
  std::size_t spanned_levels = 0;
};

/// Certificate for a weak embedding of K_{a,...,a} into a set family.
/// Throws InvalidEmbedding when e is not such an embedding, and
/// InternalExhaustion if a certificate inequality fails.
SpanCertificate span_certificate(const Embedding& e);

}  // namespace subposet
