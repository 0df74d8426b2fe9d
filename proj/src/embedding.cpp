#include "subposet/embedding.hpp"

#include "subposet/error.hpp"

#include <algorithm>
#include <numeric>

namespace subposet {

std::string to_string(Mode m) { return m == Mode::Weak ? "weak" : "induced"; }

Mode parse_mode(const std::string& text) {
  if (text == "weak") return Mode::Weak;
  if (text == "induced") return Mode::Induced;
  throw ParseError("mode must be 'weak' or 'induced', got '" + text + "'");
}

bool is_valid_assignment(const Poset& host, const Poset& pattern,
                         const std::vector<std::size_t>& assignment, Mode mode) {
  if (assignment.size() != pattern.size()) return false;
  std::vector<bool> used(host.size(), false);
  for (std::size_t img : assignment) {
    if (img >= host.size() || used[img]) return false;
    used[img] = true;
  }
  for (std::size_t x = 0; x < pattern.size(); ++x)
    for (std::size_t y = 0; y < pattern.size(); ++y) {
      if (x == y) continue;
      const bool p = pattern.less(x, y);
      const bool h = host.less(assignment[x], assignment[y]);
      if (p && !h) return false;
      if (mode == Mode::Induced && h && !p) return false;
    }
  return true;
}

bool validate(const Embedding& e, const Poset& host) {
  return e.target == TargetKind::Poset &&
         is_valid_assignment(host, e.pattern, e.assignment, e.mode);
}

bool validate(const Embedding& e, const SetFamily& host) {
  if (e.target != TargetKind::Family) return false;
  const std::size_t p = e.pattern.size();
  if (e.images.size() != p || e.assignment.size() != p) return false;
  for (std::size_t x = 0; x < p; ++x) {
    if (!host.contains(e.images[x])) return false;
    if (host.index_of(e.images[x]) != e.assignment[x]) return false;
  }
  for (std::size_t x = 0; x < p; ++x)
    for (std::size_t y = 0; y < p; ++y) {
      if (x == y) continue;
      if (e.images[x] == e.images[y]) return false;
      const bool below = e.pattern.less(x, y);
      const bool inside = e.images[x].proper_subset_of(e.images[y]);
      if (below && !inside) return false;
      if (e.mode == Mode::Induced && inside && !below) return false;
    }
  return true;
}

SubposetMatcher::SubposetMatcher(const Poset& host, const Poset& pattern, Mode mode)
    : host_(host), pattern_(pattern), mode_(mode) {
  const std::size_t np = pattern.size();
  const std::size_t nh = host.size();

  order_.resize(np);
  std::iota(order_.begin(), order_.end(), 0);
  auto degree = [&](std::size_t x) { return pattern.up(x).count() + pattern.down(x).count(); };
  std::stable_sort(order_.begin(), order_.end(),
                   [&](std::size_t a, std::size_t b) { return degree(a) > degree(b); });

  static_domain_.assign(np, Bits(nh));
  for (std::size_t x = 0; x < np; ++x)
    for (std::size_t y = 0; y < nh; ++y)
      if (host.rank_below()[y] >= pattern.rank_below()[x] &&
          host.rank_above()[y] >= pattern.rank_above()[x] &&
          host.down(y).count() >= pattern.down(x).count() &&
          host.up(y).count() >= pattern.up(x).count())
        static_domain_[x].set(y);

  if (mode == Mode::Induced) {
    incomparable_.assign(nh, Bits(nh));
    for (std::size_t y = 0; y < nh; ++y) {
      incomparable_[y] = ~(host.up(y) | host.down(y));
      incomparable_[y].reset(y);
    }
  }

  twins_.resize(np);
  for (std::size_t x = 0; x < np; ++x)
    for (std::size_t z = 0; z < np; ++z)
      if (x != z && pattern.up(x) == pattern.up(z) && pattern.down(x) == pattern.down(z))
        twins_[x].push_back(z);

  stack_.assign(np + 1, std::vector<Bits>(np, Bits(nh)));
}

void SubposetMatcher::tick() {
  ++nodes_;
  if (budget_ != 0 && nodes_ > budget_)
    throw SearchBudgetExceeded("embedding search exceeded " + std::to_string(budget_) + " nodes");
}

bool SubposetMatcher::search(std::size_t depth, std::vector<Bits>& domains) {
  const std::size_t np = pattern_.size();
  if (depth == np) {
    ++visited_;
    if (visitor_ == nullptr) return true;
    if (!(*visitor_)(assignment_)) stop_ = true;
    return stop_;
  }
  const std::size_t x = order_[depth];
  const Bits& cand = domains[x];
  std::vector<Bits>& next = stack_[depth + 1];
  for (auto y = cand.find_first(); y != Bits::npos; y = cand.find_next(y)) {
    tick();
    if (use_twins_) {
      bool ok = true;
      for (std::size_t t : twins_[x])
        if (assigned_[t] && ((t < x) != (assignment_[t] < y))) {
          ok = false;
          break;
        }
      if (!ok) continue;
    }
    bool feasible = true;
    for (std::size_t d = depth + 1; d < np && feasible; ++d) {
      const std::size_t z = order_[d];
      Bits& dz = next[z];
      dz = domains[z];
      dz.reset(y);
      if (pattern_.less(x, z))
        dz &= host_.up(y);
      else if (pattern_.less(z, x))
        dz &= host_.down(y);
      else if (mode_ == Mode::Induced)
        dz &= incomparable_[y];
      feasible = dz.any();
    }
    if (!feasible) continue;
    assignment_[x] = y;
    assigned_[x] = true;
    const bool done = search(depth + 1, next);
    assigned_[x] = false;
    if (done) return true;
  }
  return false;
}

std::optional<std::vector<std::size_t>> SubposetMatcher::find() {
  Bits all(host_.size());
  all.set();
  return find(all);
}

std::optional<std::vector<std::size_t>> SubposetMatcher::find(const Bits& allowed,
                                                              std::optional<std::size_t> forced) {
  const std::size_t np = pattern_.size();
  if (np == 0) return std::vector<std::size_t>{};
  if (np > host_.size()) return std::nullopt;
  visitor_ = nullptr;
  use_twins_ = false;
  assignment_.assign(np, 0);
  assigned_.assign(np, false);

  auto run = [&](std::vector<Bits>& domains) -> bool {
    for (const auto& d : domains)
      if (d.none()) return false;
    return search(0, domains);
  };

  if (!forced) {
    std::vector<Bits>& dom = stack_[0];
    for (std::size_t x = 0; x < np; ++x) dom[x] = static_domain_[x] & allowed;
    if (run(dom)) return assignment_;
    return std::nullopt;
  }

  // Some pattern element must land on the forced host id; try each in turn,
  // visiting it first.
  const std::vector<std::size_t> base_order = order_;
  std::optional<std::vector<std::size_t>> found;
  for (std::size_t x : base_order) {
    if (!static_domain_[x].test(*forced)) continue;
    order_.clear();
    order_.push_back(x);
    for (std::size_t z : base_order)
      if (z != x) order_.push_back(z);
    std::vector<Bits>& dom = stack_[0];
    for (std::size_t z = 0; z < np; ++z) dom[z] = static_domain_[z] & allowed;
    dom[x].reset();
    dom[x].set(*forced);
    if (run(dom)) {
      found = assignment_;
      break;
    }
  }
  order_ = base_order;
  return found;
}

std::uint64_t SubposetMatcher::enumerate(
    const std::function<bool(const std::vector<std::size_t>&)>& visit, bool break_twin_symmetry) {
  const std::size_t np = pattern_.size();
  visitor_ = &visit;
  use_twins_ = break_twin_symmetry;
  stop_ = false;
  visited_ = 0;
  assignment_.assign(np, 0);
  assigned_.assign(np, false);
  if (np == 0) {
    visit(assignment_);
    visitor_ = nullptr;
    return 1;
  }
  if (np <= host_.size()) {
    std::vector<Bits>& dom = stack_[0];
    bool ok = true;
    for (std::size_t x = 0; x < np; ++x) {
      dom[x] = static_domain_[x];
      ok = ok && dom[x].any();
    }
    if (ok) search(0, dom);
  }
  visitor_ = nullptr;
  return visited_;
}

std::optional<Embedding> find_subposet(const Poset& host, const Poset& pattern, Mode mode,
                                       SearchOptions opts) {
  SubposetMatcher m(host, pattern, mode);
  m.set_node_budget(opts.node_budget);
  auto a = m.find();
  if (!a) return std::nullopt;
  return Embedding{pattern, mode, TargetKind::Poset, *a, {}};
}

std::optional<Embedding> find_subposet(const SetFamily& host, const Poset& pattern, Mode mode,
                                       SearchOptions opts) {
  const Poset hp = host.inclusion_poset();
  SubposetMatcher m(hp, pattern, mode);
  m.set_node_budget(opts.node_budget);
  auto a = m.find();
  if (!a) return std::nullopt;
  Embedding e{pattern, mode, TargetKind::Family, *a, {}};
  for (std::size_t id : *a) e.images.push_back(host[id]);
  return e;
}

std::uint64_t enumerate_embeddings(const SetFamily& host, const Poset& pattern, Mode mode,
                                   const std::function<bool(const Embedding&)>& visit,
                                   bool break_twin_symmetry, SearchOptions opts) {
  const Poset hp = host.inclusion_poset();
  SubposetMatcher m(hp, pattern, mode);
  m.set_node_budget(opts.node_budget);
  Embedding e{pattern, mode, TargetKind::Family, {}, {}};
  return m.enumerate(
      [&](const std::vector<std::size_t>& a) {
        e.assignment = a;
        e.images.clear();
        for (std::size_t id : a) e.images.push_back(host[id]);
        return visit(e);
      },
      break_twin_symmetry);
}

DiamondProductEmbedding embed_into_diamond_product(const Poset& p) {
  const auto layers = mirsky_decomposition(p);
  DiamondProductEmbedding out;
  out.layer_sizes = layers.layer_sizes();
  if (layers.layers.empty()) {
    out.embedding = Embedding{p, Mode::Weak, TargetKind::Poset, {}, {}};
    return out;
  }

  // Build the product left to right, tracking where each diamond's middle
  // elements (ids 1..a) end up.
  Poset target = diamond(out.layer_sizes[0]);
  std::vector<std::vector<std::size_t>> middles(layers.layers.size());
  for (std::size_t c = 1; c <= out.layer_sizes[0]; ++c) middles[0].push_back(c);
  for (std::size_t i = 1; i < layers.layers.size(); ++i) {
    const Poset d = diamond(out.layer_sizes[i]);
    const auto ids = product_right_ids(target, d);
    for (std::size_t c = 1; c <= out.layer_sizes[i]; ++c) middles[i].push_back(ids[c]);
    target = product(target, d);
  }

  std::vector<std::size_t> assignment(p.size());
  for (std::size_t i = 0; i < layers.layers.size(); ++i)
    for (std::size_t j = 0; j < layers.layers[i].size(); ++j)
      assignment[layers.layers[i][j]] = middles[i][j];

  out.embedding = Embedding{p, Mode::Weak, TargetKind::Poset, std::move(assignment), {}};
  if (!validate(out.embedding, target))
    throw InternalExhaustion("diamond-product embedding failed validation");
  out.target = std::move(target);
  return out;
}

}  // namespace subposet
