#include "subposet/poset.hpp"

#include "subposet/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace subposet {

namespace {

void close_transitively(std::vector<Bits>& up) {
  const std::size_t n = up.size();
  // Warshall over bitset rows.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (up[i].test(k)) up[i] |= up[k];
}

}  // namespace

Poset::Poset(std::vector<Bits> closed_up) : up_(std::move(closed_up)) {
  const std::size_t n = up_.size();
  down_.assign(n, Bits(n));
  for (std::size_t x = 0; x < n; ++x)
    for (auto y = up_[x].find_first(); y != Bits::npos; y = up_[x].find_next(y))
      down_[y].set(x);

  // Longest chains by processing in order of |down| (a linear extension).
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return down_[a].count() < down_[b].count();
  });
  rank_below_.assign(n, 1);
  for (std::size_t x : order)
    for (auto y = down_[x].find_first(); y != Bits::npos; y = down_[x].find_next(y))
      rank_below_[x] = std::max(rank_below_[x], rank_below_[y] + 1);
  rank_above_.assign(n, 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    for (auto y = up_[*it].find_first(); y != Bits::npos; y = up_[*it].find_next(y))
      rank_above_[*it] = std::max(rank_above_[*it], rank_above_[y] + 1);
}

Poset Poset::from_relations(std::size_t size, const std::vector<Relation>& pairs) {
  std::vector<Bits> up(size, Bits(size));
  for (const auto& [below, above] : pairs) {
    if (below >= size || above >= size)
      throw InvalidSpec("relation (" + std::to_string(below) + "," +
                        std::to_string(above) + ") references an id >= " +
                        std::to_string(size));
    up[below].set(above);
  }
  return from_up_sets(std::move(up));
}

Poset Poset::from_up_sets(std::vector<Bits> up) {
  close_transitively(up);
  for (std::size_t x = 0; x < up.size(); ++x)
    if (up[x].test(x))
      throw CycleDetected("element " + std::to_string(x) + " lies on a cycle");
  return Poset(std::move(up));
}

std::size_t Poset::relation_count() const {
  std::size_t c = 0;
  for (const auto& row : up_) c += row.count();
  return c;
}

std::vector<Poset::Relation> Poset::relations() const {
  std::vector<Relation> out;
  for (std::size_t x = 0; x < size(); ++x)
    for (auto y = up_[x].find_first(); y != Bits::npos; y = up_[x].find_next(y))
      out.emplace_back(x, y);
  return out;
}

std::vector<std::size_t> Poset::maximal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < size(); ++x)
    if (up_[x].none()) out.push_back(x);
  return out;
}

std::vector<std::size_t> Poset::minimal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < size(); ++x)
    if (down_[x].none()) out.push_back(x);
  return out;
}

std::vector<std::size_t> AntichainDecomposition::layer_sizes() const {
  std::vector<std::size_t> out;
  out.reserve(layers.size());
  for (const auto& l : layers) out.push_back(l.size());
  return out;
}

Poset chain(std::size_t k) { return make_standard({StandardPoset::Kind::Chain, {k}}); }
Poset diamond(std::size_t k) { return make_standard({StandardPoset::Kind::Diamond, {k}}); }
Poset antichain(std::size_t k) { return make_standard({StandardPoset::Kind::Antichain, {k}}); }
Poset complete_multilevel(const std::vector<std::size_t>& levels) {
  return make_standard({StandardPoset::Kind::CompleteMultilevel, levels});
}

Poset make_standard(const StandardPoset& spec) {
  if (spec.sizes.empty()) throw InvalidSpec("no size given");
  for (std::size_t s : spec.sizes)
    if (s == 0) throw InvalidSpec("sizes must be at least 1");
  if (spec.kind != StandardPoset::Kind::CompleteMultilevel && spec.sizes.size() != 1)
    throw InvalidSpec("expected exactly one size");

  std::vector<Poset::Relation> rel;
  switch (spec.kind) {
    case StandardPoset::Kind::Chain: {
      const std::size_t k = spec.sizes[0];
      for (std::size_t i = 0; i + 1 < k; ++i) rel.emplace_back(i, i + 1);
      return Poset::from_relations(k, rel);
    }
    case StandardPoset::Kind::Antichain:
      return Poset::from_relations(spec.sizes[0], rel);
    case StandardPoset::Kind::Diamond: {
      const std::size_t k = spec.sizes[0];
      for (std::size_t c = 1; c <= k; ++c) {
        rel.emplace_back(0, c);
        rel.emplace_back(c, k + 1);
      }
      return Poset::from_relations(k + 2, rel);
    }
    case StandardPoset::Kind::CompleteMultilevel: {
      std::size_t start = 0;
      std::size_t total = std::accumulate(spec.sizes.begin(), spec.sizes.end(), std::size_t{0});
      for (std::size_t lvl = 0; lvl + 1 < spec.sizes.size(); ++lvl) {
        const std::size_t next = start + spec.sizes[lvl];
        for (std::size_t x = start; x < next; ++x)
          for (std::size_t y = next; y < next + spec.sizes[lvl + 1]; ++y)
            rel.emplace_back(x, y);
        start = next;
      }
      return Poset::from_relations(total, rel);
    }
  }
  throw InvalidSpec("unknown poset kind");
}

std::size_t height(const Poset& p) {
  const auto& r = p.rank_below();
  return r.empty() ? 0 : *std::max_element(r.begin(), r.end());
}

AntichainDecomposition mirsky_decomposition(const Poset& p) {
  AntichainDecomposition d;
  d.layers.resize(height(p));
  for (std::size_t x = 0; x < p.size(); ++x) d.layers[p.rank_below()[x] - 1].push_back(x);
  return d;
}

std::vector<std::size_t> product_right_ids(const Poset& p, const Poset& q) {
  auto pmax = p.maximal_elements();
  auto qmin = q.minimal_elements();
  if (pmax.size() != 1) throw NotUniqueExtremum("left factor has no unique maximal element");
  if (qmin.size() != 1) throw NotUniqueExtremum("right factor has no unique minimal element");
  std::vector<std::size_t> ids(q.size());
  std::size_t next = p.size();
  for (std::size_t y = 0; y < q.size(); ++y) ids[y] = (y == qmin[0]) ? pmax[0] : next++;
  return ids;
}

Poset product(const Poset& p, const Poset& q) {
  auto ids = product_right_ids(p, q);
  std::vector<Poset::Relation> rel = p.relations();
  for (auto [a, b] : q.relations()) rel.emplace_back(ids[a], ids[b]);
  return Poset::from_relations(p.size() + q.size() - 1, rel);
}

bool isomorphic(const Poset& p, const Poset& q) {
  if (p.size() != q.size() || p.relation_count() != q.relation_count()) return false;
  std::vector<std::size_t> perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t x = 0; x < p.size() && ok; ++x)
      for (std::size_t y = 0; y < p.size() && ok; ++y)
        ok = p.less(x, y) == q.less(perm[x], perm[y]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<std::size_t> complete_multilevel_shape(const Poset& p) {
  auto d = mirsky_decomposition(p);
  if (d.layers.empty()) return {};
  const std::size_t a = d.layers[0].size();
  for (const auto& layer : d.layers)
    if (layer.size() != a) return {};
  for (std::size_t i = 0; i < d.layers.size(); ++i)
    for (std::size_t j = i + 1; j < d.layers.size(); ++j)
      for (std::size_t x : d.layers[i])
        for (std::size_t y : d.layers[j])
          if (!p.less(x, y)) return {};
  return d.layer_sizes();
}

}  // namespace subposet
