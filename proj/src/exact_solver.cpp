#include "subposet/exact_solver.hpp"

#include "subposet/error.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <thread>

namespace subposet {

std::string to_string(Objective o) { return o == Objective::Cardinality ? "cardinality" : "lubell"; }

Objective parse_objective(const std::string& text) {
  if (text == "cardinality") return Objective::Cardinality;
  if (text == "lubell") return Objective::Lubell;
  throw ParseError("objective must be 'cardinality' or 'lubell', got '" + text + "'");
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("SUBPOSET_LAB_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

namespace {

bool is_chain(const Poset& p) { return height(p) == p.size(); }

/// Minimum chain cover of a strict order by bipartite matching (Kuhn).
std::vector<std::vector<std::size_t>> min_chain_partition(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::size_t> match_right(n, n);  // right y -> left x with x < y
  std::vector<std::size_t> match_left(n, n);
  std::vector<bool> seen;
  std::function<bool(std::size_t)> augment = [&](std::size_t x) -> bool {
    const Bits& ups = p.up(x);
    for (auto y = ups.find_first(); y != Bits::npos; y = ups.find_next(y)) {
      if (seen[y]) continue;
      seen[y] = true;
      if (match_right[y] == n || augment(match_right[y])) {
        match_right[y] = x;
        match_left[x] = y;
        return true;
      }
    }
    return false;
  };
  for (std::size_t x = 0; x < n; ++x) {
    seen.assign(n, false);
    augment(x);
  }
  std::vector<std::vector<std::size_t>> chains;
  for (std::size_t x = 0; x < n; ++x) {
    if (match_right[x] != n) continue;  // not a chain start
    std::vector<std::size_t> c;
    for (std::size_t y = x; y != n; y = match_left[y]) c.push_back(y);
    chains.push_back(std::move(c));
  }
  return chains;
}

std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t g = std::gcd(a, b);
  const unsigned __int128 r = static_cast<unsigned __int128>(a / g) * b;
  if (r > std::numeric_limits<std::uint64_t>::max())
    throw InvalidParams("Lubell weights overflow 64-bit scaling");
  return static_cast<std::uint64_t>(r);
}

constexpr std::size_t kNoCap = std::numeric_limits<std::size_t>::max();

struct Best {
  bool found = false;
  std::uint64_t value = 0;
  std::vector<std::size_t> members;
};

/// Branch-and-bound over subfamilies of a fixed host in canonical order.
class FamilySearch {
 public:
  FamilySearch(const SetFamily& host, const Poset& pattern, const SolverOptions& opts)
      : host_(host),
        host_poset_(host.inclusion_poset()),
        pattern_(pattern),
        opts_(opts),
        weights_(host.size(), 1),
        scale_(1) {
    if (pattern.size() == 0) throw InvalidParams("pattern must have at least one element");
    if (opts.objective == Objective::Lubell) {
      for (const auto& s : host) {
        const BigInt b = binomial(host.n(), s.weight());
        if (b > std::numeric_limits<std::uint64_t>::max())
          throw InvalidParams("binomial too large for Lubell scaling");
        scale_ = checked_lcm(scale_, static_cast<std::uint64_t>(b));
      }
      for (std::size_t i = 0; i < host.size(); ++i)
        weights_[i] = scale_ / static_cast<std::uint64_t>(binomial(host.n(), host[i].weight()));
    }
    // Any chain of |P| sets holds a weak copy of P (and an induced one when P is a chain).
    cap_ = (opts.mode == Mode::Weak || is_chain(pattern)) ? pattern.size() - 1 : kNoCap;
    chains_ = min_chain_partition(host_poset_);
    chain_of_.assign(host.size(), 0);
    for (std::size_t c = 0; c < chains_.size(); ++c) {
      std::sort(chains_[c].begin(), chains_[c].end());
      for (std::size_t i : chains_[c]) chain_of_[i] = c;
    }
  }

  std::size_t host_size() const { return host_.size(); }

  /// State for a subtree: the decisions taken on indices < start.
  struct State {
    std::size_t start = 0;
    std::uint64_t value = 0;
    std::vector<std::size_t> members;
    std::vector<std::size_t> chain_counts;
    Bits chosen;
  };

  State root() const {
    State s;
    s.chain_counts.assign(chains_.size(), 0);
    s.chosen = Bits(host_.size());
    return s;
  }

  /// Whether index i can join the state's family without creating P.
  bool can_add(SubposetMatcher& matcher, const State& s, std::size_t i) const {
    if (cap_ != kNoCap && s.chain_counts[chain_of_[i]] >= cap_) return false;
    Bits allowed = s.chosen;
    allowed.set(i);
    return !matcher.find(allowed, i).has_value();
  }

  void add(State& s, std::size_t i) const {
    s.chosen.set(i);
    s.members.push_back(i);
    s.value += weights_[i];
    ++s.chain_counts[chain_of_[i]];
  }

  void remove(State& s, std::size_t i) const {
    s.chosen.reset(i);
    s.members.pop_back();
    s.value -= weights_[i];
    --s.chain_counts[chain_of_[i]];
  }

  std::uint64_t bound(const State& s, std::size_t idx) const {
    std::uint64_t extra = 0;
    for (std::size_t c = 0; c < chains_.size(); ++c) {
      const auto& ch = chains_[c];
      auto first = std::lower_bound(ch.begin(), ch.end(), idx);
      const std::size_t remaining = static_cast<std::size_t>(ch.end() - first);
      if (remaining == 0) continue;
      const std::size_t room =
          cap_ == kNoCap ? remaining
                         : (s.chain_counts[c] >= cap_ ? 0 : std::min(remaining, cap_ - s.chain_counts[c]));
      if (room == 0) continue;
      if (opts_.objective == Objective::Cardinality) {
        extra += room;
      } else {
        std::vector<std::uint64_t> w;
        for (auto it = first; it != ch.end(); ++it) w.push_back(weights_[*it]);
        std::partial_sort(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(room), w.end(),
                          std::greater<>());
        for (std::size_t t = 0; t < room; ++t) extra += w[t];
      }
    }
    return s.value + extra;
  }

  /// Include-first DFS from `s`. Subtrees whose bound is below `floor` are
  /// skipped; ties against the local best are skipped too, so the first
  /// optimum reached is the lexicographically least.
  void dfs(SubposetMatcher& matcher, State& s, std::size_t idx, Best& best, std::uint64_t floor,
           std::uint64_t& nodes) const {
    ++nodes;
    if (opts_.node_budget != 0 && nodes > opts_.node_budget)
      throw SearchBudgetExceeded("solver exceeded " + std::to_string(opts_.node_budget) + " nodes");
    if (!best.found || s.value > best.value) {
      best.found = true;
      best.value = s.value;
      best.members = s.members;
    }
    if (idx == host_.size()) return;
    const std::uint64_t ub = bound(s, idx);
    if (ub < floor || ub <= best.value) return;
    if (can_add(matcher, s, idx)) {
      add(s, idx);
      dfs(matcher, s, idx + 1, best, floor, nodes);
      remove(s, idx);
    }
    dfs(matcher, s, idx + 1, best, floor, nodes);
  }

  Rational to_value(std::uint64_t v) const { return Rational(BigInt(v), BigInt(scale_)); }

  /// Greedy pass in canonical order; the first leaf of the DFS.
  std::uint64_t greedy_value(SubposetMatcher& matcher) const {
    State s = root();
    for (std::size_t i = 0; i < host_.size(); ++i)
      if (can_add(matcher, s, i)) add(s, i);
    return s.value;
  }

  const SetFamily& host() const { return host_; }
  const Poset& host_poset() const { return host_poset_; }

 private:
  const SetFamily& host_;
  Poset host_poset_;
  const Poset& pattern_;
  SolverOptions opts_;
  std::vector<std::uint64_t> weights_;
  std::uint64_t scale_;
  std::size_t cap_;
  std::vector<std::vector<std::size_t>> chains_;
  std::vector<std::size_t> chain_of_;
};

ExtremalResult make_result(const FamilySearch& fs, const Best& best, const SolverOptions& opts,
                           bool exhaustive, std::uint64_t nodes) {
  ExtremalResult r;
  r.value = fs.to_value(best.value);
  r.witness = fs.host().subfamily(best.members);
  r.mode = opts.mode;
  r.objective = opts.objective;
  r.exhaustive = exhaustive;
  r.nodes_explored = nodes;
  return r;
}

ExtremalResult solve_serial(const FamilySearch& fs, const Poset& pattern, const SolverOptions& opts) {
  SubposetMatcher matcher(fs.host_poset(), pattern, opts.mode);
  auto s = fs.root();
  Best best;
  std::uint64_t nodes = 0;
  bool exhaustive = true;
  try {
    fs.dfs(matcher, s, 0, best, 0, nodes);
  } catch (const SearchBudgetExceeded&) {
    exhaustive = false;
    --nodes;
  }
  return make_result(fs, best, opts, exhaustive, nodes);
}

ExtremalResult solve_parallel(const FamilySearch& fs, const Poset& pattern,
                              const SolverOptions& opts, unsigned threads) {
  // Split on the first few canonical indices; each feasible prefix is an
  // independent subtree. All subtrees prune strictly against the greedy
  // value, so per-task results and node counts do not depend on timing.
  SubposetMatcher seed_matcher(fs.host_poset(), pattern, opts.mode);
  const std::uint64_t floor = fs.greedy_value(seed_matcher);

  const std::size_t split = std::min<std::size_t>(fs.host_size(), 6);
  std::vector<FamilySearch::State> tasks;
  std::uint64_t prefix_nodes = 0;
  std::function<void(FamilySearch::State&, std::size_t)> expand = [&](FamilySearch::State& s,
                                                                       std::size_t idx) {
    if (idx == split) {
      FamilySearch::State t = s;
      t.start = idx;
      tasks.push_back(std::move(t));
      return;
    }
    ++prefix_nodes;
    if (fs.can_add(seed_matcher, s, idx)) {
      fs.add(s, idx);
      expand(s, idx + 1);
      fs.remove(s, idx);
    }
    expand(s, idx + 1);
  };
  auto root = fs.root();
  expand(root, 0);

  std::vector<Best> results(tasks.size());
  std::vector<std::uint64_t> task_nodes(tasks.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    SubposetMatcher matcher(fs.host_poset(), pattern, opts.mode);
    for (std::size_t t = next++; t < tasks.size(); t = next++) {
      auto s = tasks[t];
      fs.dfs(matcher, s, s.start, results[t], floor, task_nodes[t]);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  Best best;
  std::uint64_t nodes = prefix_nodes;
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    nodes += task_nodes[t];
    if (results[t].found && (!best.found || results[t].value > best.value)) best = results[t];
  }
  return make_result(fs, best, opts, true, nodes);
}

}  // namespace

ExtremalResult alpha(const SetFamily& host, const Poset& pattern, const SolverOptions& opts) {
  FamilySearch fs(host, pattern, opts);
  const unsigned threads = opts.threads == 0 ? default_thread_count() : opts.threads;
  if (threads <= 1 || opts.node_budget != 0 || host.size() < 8)
    return solve_serial(fs, pattern, opts);
  return solve_parallel(fs, pattern, opts, threads);
}

ExtremalResult la_exact(unsigned n, const Poset& pattern, const SolverOptions& opts) {
  if (n > kExactGuardN && !opts.allow_large_n)
    throw PreconditionViolated("n = " + std::to_string(n) + " exceeds the exact-search guard of " +
                               std::to_string(kExactGuardN) + "; pass an explicit override");
  return alpha(SetFamily::power_set(n), pattern, opts);
}

ExtremalResult lubell_max(unsigned n, const Poset& pattern, SolverOptions opts) {
  opts.objective = Objective::Lubell;
  return la_exact(n, pattern, opts);
}

Rational estimate_induced_constant(const Poset& pattern, unsigned max_n) {
  SolverOptions opts;
  opts.mode = Mode::Induced;
  opts.threads = 1;
  Rational best = 0;
  for (unsigned n = 0; n <= max_n; ++n) {
    auto r = la_exact(n, pattern, opts);
    best = std::max(best, r.value / Rational(binomial(n, n / 2)));
  }
  return best;
}

ExtremalResult alpha_exhaustive(const SetFamily& host, const Poset& pattern, Mode mode,
                                Objective objective) {
  if (host.size() > 24) throw InvalidParams("exhaustive enumeration limited to 24 sets");
  const Poset hp = host.inclusion_poset();
  SubposetMatcher matcher(hp, pattern, mode);
  ExtremalResult r;
  r.mode = mode;
  r.objective = objective;
  bool found = false;
  std::vector<std::size_t> best_members;
  const std::uint64_t total = std::uint64_t{1} << host.size();
  // Walk subfamilies so that the lexicographically least index list comes first
  // among equal values: index 0 is the most significant bit.
  for (std::uint64_t code = total; code-- > 0;) {
    Bits allowed(host.size());
    std::vector<std::size_t> members;
    Rational value = 0;
    for (std::size_t i = 0; i < host.size(); ++i)
      if ((code >> (host.size() - 1 - i)) & 1U) {
        allowed.set(i);
        members.push_back(i);
        value += objective == Objective::Cardinality
                     ? Rational(1)
                     : Rational(1, binomial(host.n(), host[i].weight()));
      }
    ++r.nodes_explored;
    if (found && value <= r.value) continue;
    if (matcher.find(allowed).has_value()) continue;
    found = true;
    r.value = value;
    best_members = members;
  }
  r.witness = host.subfamily(best_members);
  return r;
}

DoubleCountingReport verify_double_counting(const SetFamily& host, const Poset& pattern,
                                            const SetFamily& family, Mode mode) {
  if (host.n() != family.n()) throw InvalidParams("host and family use different ground sets");
  if (find_subposet(family, pattern, mode))
    throw PFreenessViolated("the family contains the pattern");
  const unsigned n = host.n();
  const auto counts = host.level_counts();

  DoubleCountingReport rep;
  for (const auto& a : family) {
    rep.weighted_sum += Rational(BigInt(counts[a.weight()]), binomial(n, a.weight()));
    rep.pairs_closed_form += permutation_hit_count(host, a);
  }
  SolverOptions opts;
  opts.mode = mode;
  opts.threads = 1;
  rep.alpha = alpha(host, pattern, opts).value;
  rep.inequality_holds = rep.weighted_sum <= rep.alpha;

  if (n <= 6) {
    rep.exhaustive = true;
    Permutation pi = identity_permutation(n);
    do {
      std::size_t hit = 0;
      for (const auto& s : host)
        if (family.contains(apply_permutation(s, pi))) ++hit;
      rep.pairs_enumerated += hit;
      rep.max_intersection = std::max(rep.max_intersection, hit);
    } while (std::next_permutation(pi.begin(), pi.end()));
    rep.identity_holds = rep.pairs_enumerated == rep.pairs_closed_form &&
                         Rational(BigInt(rep.max_intersection)) <= rep.alpha;
  }
  return rep;
}

}  // namespace subposet
