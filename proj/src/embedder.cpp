#include "subposet/embedder.hpp"

#include "subposet/error.hpp"
#include "subposet/interval_chain.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace subposet {

std::size_t greedy_threshold(const Poset& p, unsigned k) {
  return p.size() + (height(p) - 1) * unrelated_count_formula(k);
}

std::vector<Subset> greedy_total_order(const SetFamily& host, unsigned k) {
  const IntervalChainSpec spec(host.n(), k);
  std::vector<Subset> order(host.begin(), host.end());
  std::sort(order.begin(), order.end(), [&](const Subset& a, const Subset& b) {
    if (a.weight() != b.weight()) return a.weight() > b.weight();
    const Subset worst = worst_set(spec, a.weight());
    if (a == worst) return false;
    if (b == worst) return true;
    return a.indicator() < b.indicator();
  });
  return order;
}

GreedyResult greedy_embed(const SetFamily& host, const Poset& p, unsigned k) {
  const unsigned n = host.n();
  if (k < 2) throw PreconditionViolated("k must be at least 2");
  if (k > n) throw PreconditionViolated("k must not exceed n");
  for (const auto& s : host) {
    if (!in_canonical_chain(s, k))
      throw PreconditionViolated(s.str() + " is not in the canonical k-interval chain");
    if (s.weight() + 3 < 3 * k || s.weight() + k > n + 1)
      throw PreconditionViolated(s.str() + " has size outside [3k-3, n-k+1]");
  }
  const std::size_t threshold = greedy_threshold(p, k);
  if (host.size() < threshold)
    throw PreconditionViolated("host has " + std::to_string(host.size()) + " sets, needs " +
                               std::to_string(threshold));

  GreedyResult out;
  GreedyTrace& trace = out.trace;
  trace.total_order = greedy_total_order(host, k);
  trace.removal_cap = unrelated_count_formula(k);
  trace.threshold = threshold;

  const auto& order = trace.total_order;
  const std::size_t m = order.size();
  const auto layers = mirsky_decomposition(p);
  const std::size_t h = layers.height();

  std::vector<bool> removed(m, false);    // I_{i+1}
  std::vector<bool> below_all(m, true);   // properly inside every image so far
  std::vector<bool> consumed(m, false);
  std::vector<std::size_t> assignment(p.size());
  std::vector<Subset> images(p.size());

  for (std::size_t step = 0; step < h; ++step) {
    const std::size_t layer = h - step;
    const auto& elems = layers.layers[layer - 1];
    GreedyStep gs;
    gs.layer = layer;

    std::vector<std::size_t> picked;
    for (std::size_t t = 0; t < m && picked.size() < elems.size(); ++t)
      if (!removed[t]) picked.push_back(t);
    if (picked.size() < elems.size())
      throw InternalExhaustion("host exhausted at layer " + std::to_string(layer));

    for (std::size_t j = 0; j < elems.size(); ++j) {
      const Subset& img = order[picked[j]];
      images[elems[j]] = img;
      gs.images.push_back(img);
      consumed[picked[j]] = true;
    }

    if (layer >= 2) {
      for (std::size_t t = 0; t < m; ++t)
        for (std::size_t q : picked)
          if (!order[t].proper_subset_of(order[q])) {
            below_all[t] = false;
            break;
          }
      std::vector<Subset> now_removed;
      std::vector<bool> is_picked(m, false);
      for (std::size_t q : picked) is_picked[q] = true;
      for (std::size_t t = 0; t < m; ++t) {
        if (below_all[t]) continue;
        now_removed.push_back(order[t]);
        if (!removed[t] && !is_picked[t]) ++gs.newly_removed;
        removed[t] = true;
        consumed[t] = true;
      }
      gs.removed = SetFamily(n, std::move(now_removed));
      if (gs.newly_removed > trace.removal_cap)
        throw InternalExhaustion("layer " + std::to_string(layer) + " removed " +
                                 std::to_string(gs.newly_removed) + " sets, cap is " +
                                 std::to_string(trace.removal_cap));
    } else {
      gs.removed = SetFamily(n);
    }
    trace.steps.push_back(std::move(gs));
  }

  trace.consumed = static_cast<std::size_t>(std::count(consumed.begin(), consumed.end(), true));
  if (trace.consumed > threshold)
    throw InternalExhaustion("greedy embedding consumed more than the threshold");

  Embedding& e = out.embedding;
  e.pattern = p;
  e.mode = Mode::Weak;
  e.target = TargetKind::Family;
  e.images = images;
  for (std::size_t x = 0; x < p.size(); ++x) e.assignment.push_back(host.index_of(images[x]));
  if (!validate(e, host)) throw InternalExhaustion("greedy embedding failed validation");
  return out;
}

Subset shift_into_interior(const Subset& s, unsigned k) {
  if (k < 2) throw InvalidParams("k must be at least 2");
  const unsigned offset = 3 * k - 3;
  const unsigned n2 = s.n() + 4 * k - 4;
  if (n2 > kMaxGround) throw InvalidParams("shifted ground set too large");
  const std::uint64_t head = (std::uint64_t{1} << offset) - 1;
  return Subset(n2, head | (s.mask() << offset));
}

SetFamily shift_into_interior(const SetFamily& fam, unsigned k) {
  if (k < 2) throw InvalidParams("k must be at least 2");
  std::vector<Subset> out;
  out.reserve(fam.size());
  for (const auto& s : fam) out.push_back(shift_into_interior(s, k));
  return SetFamily(fam.n() + 4 * k - 4, std::move(out));
}

SetFamily middle_levels_family(unsigned n, unsigned levels) {
  if (levels > n + 1) throw InvalidParams("more levels than 2^[n] has");
  if (levels == 0) return SetFamily(n);
  const unsigned lo = (n - levels + 1) / 2;
  return SetFamily::levels(n, lo, lo + levels - 1);
}

unsigned witness_levels(std::size_t a, std::size_t h) {
  if (a < 1 || (a & (a - 1)) != 0) throw InvalidParams("layer width must be a power of two");
  if (h < 2) return 0;
  return static_cast<unsigned>((h - 2) * static_cast<std::size_t>(std::countr_zero(a)));
}

SpanCertificate span_certificate(const Embedding& e) {
  if (e.target != TargetKind::Family || e.mode != Mode::Weak)
    throw InvalidEmbedding("expected a weak embedding into a set family");
  const std::size_t p = e.pattern.size();
  if (e.images.size() != p || p == 0) throw InvalidEmbedding("image count differs from |P|");
  for (std::size_t x = 0; x < p; ++x)
    for (std::size_t y = 0; y < p; ++y) {
      if (x == y) continue;
      if (e.images[x] == e.images[y]) throw InvalidEmbedding("embedding is not injective");
      if (e.pattern.less(x, y) && !e.images[x].proper_subset_of(e.images[y]))
        throw InvalidEmbedding("an order relation is not preserved");
    }
  const auto shape = complete_multilevel_shape(e.pattern);
  if (shape.empty()) throw InvalidEmbedding("pattern is not K_{a,...,a}");

  SpanCertificate cert;
  cert.width = shape[0];
  cert.height = shape.size();
  const auto layers = mirsky_decomposition(e.pattern);
  const unsigned n = e.images[0].n();
  for (std::size_t i = 0; i + 1 < cert.height; ++i) {
    std::uint64_t u = 0;
    for (std::size_t x : layers.layers[i]) u |= e.images[x].mask();
    cert.unions.emplace_back(n, u);
  }
  unsigned lo = n, hi = 0;
  for (const auto& s : e.images) {
    lo = std::min(lo, s.weight());
    hi = std::max(hi, s.weight());
  }
  cert.spanned_levels = hi - lo + 1;

  const BigInt a(cert.width);
  for (std::size_t i = 0; i + 1 < cert.unions.size(); ++i) {
    const Subset& u = cert.unions[i];
    const Subset& v = cert.unions[i + 1];
    if (!u.subset_of(v)) throw InternalExhaustion("unions are not nested");
    if (pow2(v.weight() - u.weight()) < a)
      throw InternalExhaustion("union growth below log2 a");
  }
  if (cert.height >= 2) {
    BigInt need = 1;
    for (std::size_t i = 0; i + 2 < cert.height; ++i) need *= a;
    if (pow2(static_cast<unsigned>(cert.spanned_levels - 1)) < need)
      throw InternalExhaustion("embedding spans fewer than (h-2) log2 a + 1 levels");
  }
  return cert;
}

}  // namespace subposet
