#pragma once

#include "subposet/family.hpp"
#include "subposet/poset.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace subposet {

enum class Mode { Weak, Induced };
enum class TargetKind { Poset, Family };

std::string to_string(Mode m);
Mode parse_mode(const std::string& text);

/// An injection from a pattern poset into a host poset or set family.
struct Embedding {
  Poset pattern;
  Mode mode = Mode::Weak;
  TargetKind target = TargetKind::Poset;
  /// Pattern id -> host id (canonical index for family hosts).
  std::vector<std::size_t> assignment;
  /// Image sets, filled for family hosts.
  std::vector<Subset> images;
};

/// Checks injectivity and the order conditions for `mode`.
bool is_valid_assignment(const Poset& host, const Poset& pattern,
                         const std::vector<std::size_t>& assignment, Mode mode);
bool validate(const Embedding& e, const Poset& host);
/// Uses the images directly; the host family is only consulted for membership.
bool validate(const Embedding& e, const SetFamily& host);

struct SearchOptions {
  /// Node cap; 0 disables it.
  std::uint64_t node_budget = 0;
};

/// Exhaustive backtracking matcher for a fixed (host, pattern, mode).
///
/// Pattern elements are visited by descending comparability degree, ties by
/// id. Candidate domains are bitsets over host ids, pruned by rank and
/// up/down-set cardinality up front and by forward checking during search.
class SubposetMatcher {
 public:
  SubposetMatcher(const Poset& host, const Poset& pattern, Mode mode);

  /// Some embedding whose image lies in `allowed`; when `forced` is set the
  /// image must contain that host id.
  std::optional<std::vector<std::size_t>> find(const Bits& allowed,
                                               std::optional<std::size_t> forced = std::nullopt);
  std::optional<std::vector<std::size_t>> find();

  /// Calls `visit` on every embedding (stop by returning false). With
  /// `break_twin_symmetry`, pattern elements with identical up- and
  /// down-sets receive increasing host ids, so each image assignment up to
  /// twin swaps is reported once. Returns the number visited.
  std::uint64_t enumerate(const std::function<bool(const std::vector<std::size_t>&)>& visit,
                          bool break_twin_symmetry);

  void set_node_budget(std::uint64_t budget) { budget_ = budget; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool search(std::size_t depth, std::vector<Bits>& domains);
  void tick();

  const Poset& host_;
  const Poset& pattern_;
  Mode mode_;
  std::vector<std::size_t> order_;
  std::vector<Bits> static_domain_;
  std::vector<Bits> incomparable_;  // host, induced mode only
  std::vector<std::vector<std::size_t>> twins_;
  std::vector<std::size_t> assignment_;
  std::vector<bool> assigned_;
  std::vector<std::vector<Bits>> stack_;
  const std::function<bool(const std::vector<std::size_t>&)>* visitor_ = nullptr;
  bool use_twins_ = false;
  bool stop_ = false;
  std::uint64_t visited_ = 0;
  std::uint64_t nodes_ = 0;
  std::uint64_t budget_ = 0;
};

std::optional<Embedding> find_subposet(const Poset& host, const Poset& pattern, Mode mode,
                                       SearchOptions opts = {});
std::optional<Embedding> find_subposet(const SetFamily& host, const Poset& pattern, Mode mode,
                                       SearchOptions opts = {});

/// Visits every embedding of `pattern` into the family (see SubposetMatcher::enumerate).
std::uint64_t enumerate_embeddings(const SetFamily& host, const Poset& pattern, Mode mode,
                                   const std::function<bool(const Embedding&)>& visit,
                                   bool break_twin_symmetry = true, SearchOptions opts = {});

/// The result of placing a poset into the product of diamonds built from
/// its Mirsky layer widths.
struct DiamondProductEmbedding {
  std::vector<std::size_t> layer_sizes;
  Poset target;
  Embedding embedding;
};

/// Weak embedding of p into D_{a_1} x ... x D_{a_h}: layer i goes to the
/// middle elements of the i-th diamond.
DiamondProductEmbedding embed_into_diamond_product(const Poset& p);

}  // namespace subposet
