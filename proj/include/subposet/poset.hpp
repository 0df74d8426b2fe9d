#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace subposet {

using Bits = boost::dynamic_bitset<std::uint64_t>;

/// A finite strict partial order on the ids 0..size()-1, stored as its
/// transitive closure. Immutable once built.
class Poset {
 public:
  using Relation = std::pair<std::size_t, std::size_t>;  // (below, above)

  Poset() = default;

  /// Transitive closure of `pairs`. Throws CycleDetected when the closure
  /// is not irreflexive, InvalidSpec when an id is out of range.
  static Poset from_relations(std::size_t size, const std::vector<Relation>& pairs);

  /// Builds from a relation that is already a strict order; closes it anyway.
  static Poset from_up_sets(std::vector<Bits> up);

  std::size_t size() const { return up_.size(); }
  bool less(std::size_t x, std::size_t y) const { return up_[x].test(y); }
  bool comparable(std::size_t x, std::size_t y) const {
    return x != y && (up_[x].test(y) || up_[y].test(x));
  }
  /// Elements strictly above / below x.
  const Bits& up(std::size_t x) const { return up_[x]; }
  const Bits& down(std::size_t x) const { return down_[x]; }

  std::size_t relation_count() const;
  std::vector<Relation> relations() const;
  std::vector<std::size_t> maximal_elements() const;
  std::vector<std::size_t> minimal_elements() const;

  /// Length of a longest chain ending at x (x itself counts).
  const std::vector<std::size_t>& rank_below() const { return rank_below_; }
  /// Length of a longest chain starting at x.
  const std::vector<std::size_t>& rank_above() const { return rank_above_; }

  friend bool operator==(const Poset& a, const Poset& b) { return a.up_ == b.up_; }

 private:
  explicit Poset(std::vector<Bits> closed_up);

  std::vector<Bits> up_;
  std::vector<Bits> down_;
  std::vector<std::size_t> rank_below_;
  std::vector<std::size_t> rank_above_;
};

/// Layers A_1..A_h; layer i holds the elements whose longest chain ending
/// at them has exactly i elements.
struct AntichainDecomposition {
  std::vector<std::vector<std::size_t>> layers;

  std::size_t height() const { return layers.size(); }
  std::vector<std::size_t> layer_sizes() const;
};

struct StandardPoset {
  enum class Kind { Chain, Diamond, CompleteMultilevel, Antichain };
  Kind kind;
  std::vector<std::size_t> sizes;  // one entry except for CompleteMultilevel
};

Poset make_standard(const StandardPoset& spec);
Poset chain(std::size_t k);
/// D_k: id 0 is the bottom b, ids 1..k are c_1..c_k, id k+1 is the top d.
Poset diamond(std::size_t k);
/// K_{a_1..a_h}: ids are assigned level by level from the bottom.
Poset complete_multilevel(const std::vector<std::size_t>& levels);
Poset antichain(std::size_t k);

std::size_t height(const Poset& p);
AntichainDecomposition mirsky_decomposition(const Poset& p);

/// Identifies the unique maximum of p with the unique minimum of q.
/// Ids of p are kept; the remaining ids of q follow in their original order.
Poset product(const Poset& p, const Poset& q);

/// Where each id of q lands in product(p, q).
std::vector<std::size_t> product_right_ids(const Poset& p, const Poset& q);

/// Brute force over all bijections; intended for |p| <= 8.
bool isomorphic(const Poset& p, const Poset& q);

/// Layer widths when p is K_{a,...,a}-shaped (every element below every
/// element of each higher layer, all layers equal), else empty.
std::vector<std::size_t> complete_multilevel_shape(const Poset& p);

}  // namespace subposet
