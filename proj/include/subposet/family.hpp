#pragma once

#include "subposet/arith.hpp"
#include "subposet/poset.hpp"

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace subposet {

/// Largest supported ground set.
inline constexpr unsigned kMaxGround = 63;

/// A subset of [n] = {1..n}; element i is stored at bit i-1 of the mask.
class Subset {
 public:
  Subset() = default;
  Subset(unsigned n, std::uint64_t mask);
  /// Elements are 1-based.
  static Subset of(unsigned n, std::initializer_list<unsigned> elements);
  static Subset of(unsigned n, const std::vector<unsigned>& elements);
  /// [i] = {1..i}.
  static Subset prefix(unsigned n, unsigned i);
  static Subset full(unsigned n) { return prefix(n, n); }

  unsigned n() const { return n_; }
  std::uint64_t mask() const { return mask_; }
  unsigned weight() const { return static_cast<unsigned>(std::popcount(mask_)); }
  bool contains(unsigned element) const { return (mask_ >> (element - 1)) & 1U; }
  std::vector<unsigned> elements() const;

  bool subset_of(const Subset& o) const { return (mask_ & ~o.mask_) == 0; }
  bool proper_subset_of(const Subset& o) const { return subset_of(o) && mask_ != o.mask_; }
  /// One contains the other.
  bool related(const Subset& o) const { return subset_of(o) || o.subset_of(*this); }

  /// Indicator vector as a 0-1 string, element 1 first.
  std::string indicator() const;
  /// "{1,3}" style.
  std::string str() const;

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.n_ == b.n_ && a.mask_ == b.mask_;
  }

 private:
  unsigned n_ = 0;
  std::uint64_t mask_ = 0;
};

/// Canonical order: by weight, then by mask value.
bool canonical_less(const Subset& a, const Subset& b);

/// Permutation of [n] stored 0-based: image[i] is the image of element i+1, minus one.
using Permutation = std::vector<unsigned>;

Permutation identity_permutation(unsigned n);
Subset apply_permutation(const Subset& s, const Permutation& pi);

/// Duplicate-free collection of subsets of a common [n], kept in canonical order.
class SetFamily {
 public:
  explicit SetFamily(unsigned n = 0) : n_(n) {}
  SetFamily(unsigned n, std::vector<Subset> sets);

  /// Every subset of [n].
  static SetFamily power_set(unsigned n);
  /// Every subset of [n] whose size lies in [lo, hi].
  static SetFamily levels(unsigned n, unsigned lo, unsigned hi);

  unsigned n() const { return n_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }
  const Subset& operator[](std::size_t i) const { return sets_[i]; }
  const std::vector<Subset>& sets() const { return sets_; }
  auto begin() const { return sets_.begin(); }
  auto end() const { return sets_.end(); }

  bool contains(const Subset& s) const;
  /// Canonical index of s, or size() when absent.
  std::size_t index_of(const Subset& s) const;

  /// N_i: number of members of size i, for i = 0..n.
  std::vector<std::size_t> level_counts() const;

  /// Members selected by canonical indices.
  SetFamily subfamily(const std::vector<std::size_t>& indices) const;
  SetFamily with(const Subset& s) const;
  SetFamily without(const Subset& s) const;

  /// Strict-inclusion poset on canonical indices.
  Poset inclusion_poset() const;

  friend bool operator==(const SetFamily& a, const SetFamily& b) {
    return a.n_ == b.n_ && a.sets_ == b.sets_;
  }

 private:
  unsigned n_;
  std::vector<Subset> sets_;
};

/// Sum of 1 / binom(n, |A|) over the family.
Rational lubell(const SetFamily& fam);

SetFamily apply_permutation(const SetFamily& fam, const Permutation& pi);

/// N_{|A|} * |A|! * (n - |A|)!.
BigInt permutation_hit_count(const SetFamily& host, const Subset& a);
/// Counts permutations pi with a in host^pi by walking all of S_n.
BigInt permutation_hit_count_exhaustive(const SetFamily& host, const Subset& a);

/// Family file: `n=<N>`, then one set per line as comma-separated elements,
/// `{}` for the empty set.
void write_family(std::ostream& os, const SetFamily& fam);
SetFamily read_family(std::istream& is);
SetFamily load_family(const std::string& path);
void save_family(const std::string& path, const SetFamily& fam);

}  // namespace subposet
