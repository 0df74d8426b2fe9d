#pragma once

#include "subposet/family.hpp"

#include <cstddef>
#include <vector>

namespace subposet {

/// A k-interval chain over [n]: the union of the intervals [A_i, A_{i+k}]
/// along a maximal chain A_0 = {} < A_1 < ... < A_n = [n].
///
/// The base chain is stored as the order in which elements enter it:
/// A_i = {order[0]+1, ..., order[i-1]+1}. The canonical chain uses the
/// identity order, A_i = [i].
class IntervalChainSpec {
 public:
  IntervalChainSpec(unsigned n, unsigned k);
  IntervalChainSpec(unsigned n, unsigned k, Permutation order);
  /// From an explicit maximal chain A_0..A_n.
  static IntervalChainSpec from_base(unsigned k, const std::vector<Subset>& base);

  unsigned n() const { return n_; }
  unsigned k() const { return k_; }
  const Permutation& order() const { return order_; }
  bool canonical() const;
  /// A_i.
  Subset base_set(unsigned i) const;

  /// Membership; for the canonical base the indicator vector is an initial
  /// run of 1's, then k free bits, then 0's.
  bool contains(const Subset& s) const;

 private:
  unsigned n_;
  unsigned k_;
  Permutation order_;
};

/// Membership in the canonical chain C_k^0 by the indicator characterization.
bool in_canonical_chain(const Subset& s, unsigned k);

SetFamily interval_chain(const IntervalChainSpec& spec);

/// Number of size-m members; 2^{k-1} when k <= m <= n-k, enumerated otherwise.
std::size_t level_count(const IntervalChainSpec& spec, unsigned m);

/// Size-m members with at least j zeros before the last one, as the sum
/// of binom(k-1, h) for h = j..k-1. Requires k <= m <= n-k.
std::size_t count_trailing_zero_profile(const IntervalChainSpec& spec, unsigned m, unsigned j);
/// Same count taken directly from the enumerated chain.
std::size_t count_trailing_zero_profile_enumerated(const IntervalChainSpec& spec, unsigned m,
                                                   unsigned j);

/// Number of zeros strictly before the last 1 of the indicator vector.
unsigned zeros_before_last_one(const Subset& s);

/// Members of size <= m-1 unrelated to at least one member of size >= m.
/// Requires k >= 2 and 3k-3 <= m <= n-k+1.
SetFamily unrelated_below(const IntervalChainSpec& spec, unsigned m);
/// Same family without the range guard (used to probe outside it).
SetFamily unrelated_below_unchecked(const IntervalChainSpec& spec, unsigned m);
/// (3k-5) 2^{k-2}.
std::size_t unrelated_count_formula(unsigned k);

/// The member 1^{m-k+1} 0 1^{k-1} 0^{n-m-1} of C_k^0. Requires the
/// canonical base and k-1 <= m <= n-1.
Subset worst_set(const IntervalChainSpec& spec, unsigned m);

}  // namespace subposet
