#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracle.hpp"
#include "subposet/embedder.hpp"
#include "subposet/error.hpp"
#include "subposet/interval_chain.hpp"

using namespace subposet;

namespace {

std::vector<Subset> window(unsigned n, unsigned k) {
  std::vector<Subset> out;
  for (const auto& s : interval_chain(IntervalChainSpec(n, k)))
    if (s.weight() + 3 >= 3 * k && s.weight() + k <= n + 1) out.push_back(s);
  return out;
}

// Every |size|-subset of `pool`, by index combinations.
void for_each_subset(const std::vector<Subset>& pool, std::size_t size,
                     const std::function<void(const std::vector<Subset>&)>& f) {
  std::vector<std::size_t> idx(size);
  for (std::size_t i = 0; i < size; ++i) idx[i] = i;
  if (size > pool.size()) return;
  while (true) {
    std::vector<Subset> pick;
    for (auto i : idx) pick.push_back(pool[i]);
    f(pick);
    std::size_t i = size;
    while (i > 0 && idx[i - 1] == pool.size() - size + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void check_trace(const GreedyResult& r, const SetFamily& host, const Poset& p) {
  CHECK(validate(r.embedding, host));
  CHECK(is_valid_assignment(host.inclusion_poset(), p, r.embedding.assignment, Mode::Weak));
  for (const auto& st : r.trace.steps) CHECK(st.newly_removed <= r.trace.removal_cap);
  CHECK(r.trace.consumed <= r.trace.threshold);
}

}  // namespace

TEST_CASE("threshold and order") {
  CHECK(greedy_threshold(diamond(2), 2) == 6);
  CHECK(greedy_threshold(chain(2), 3) == 10);
  CHECK(greedy_threshold(antichain(5), 4) == 5);

  const SetFamily host(10, window(10, 2));
  const auto order = greedy_total_order(host, 2);
  REQUIRE(order.size() == host.size());
  for (std::size_t i = 1; i < order.size(); ++i) CHECK(order[i - 1].weight() >= order[i].weight());
  const IntervalChainSpec spec(10, 2);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const bool last_of_size = i + 1 == order.size() || order[i + 1].weight() != order[i].weight();
    if (order[i] == worst_set(spec, order[i].weight())) CHECK(last_of_size);
  }
}

TEST_CASE("antichain needs no removals") {
  const SetFamily host(10, window(10, 2));
  for (std::size_t t = 1; t <= 5; ++t) {
    const auto r = greedy_embed(host, antichain(t), 2);
    REQUIRE(r.trace.steps.size() == 1);
    CHECK(r.trace.steps[0].removed.empty());
    const auto order = greedy_total_order(host, 2);
    CHECK(r.trace.steps[0].images == std::vector<Subset>(order.begin(), order.begin() + static_cast<long>(t)));
  }
}

TEST_CASE("nested pair on C_2^0 over [8]") {
  const SetFamily host(8, window(8, 2));
  const auto r = greedy_embed(host, chain(2), 2);
  check_trace(r, host, chain(2));
  CHECK(r.embedding.images[0].proper_subset_of(r.embedding.images[1]));
  std::size_t removals = 0;
  for (const auto& st : r.trace.steps) removals += st.newly_removed;
  CHECK(removals <= 1);
}

TEST_CASE("exhaustive minimal hosts, k = 2") {
  const std::vector<Poset> patterns = {chain(2), chain(3), diamond(1), diamond(2), complete_multilevel({1, 2})};
  for (unsigned n = 5; n <= 10; ++n) {
    const auto pool = window(n, 2);
    for (const auto& p : patterns) {
      std::size_t runs = 0, fails = 0;
      for_each_subset(pool, greedy_threshold(p, 2), [&](const std::vector<Subset>& pick) {
        const SetFamily host(n, pick);
        ++runs;
        try {
          check_trace(greedy_embed(host, p, 2), host, p);
        } catch (const Error&) {
          ++fails;
        }
      });
      CHECK(fails == 0);
      if (n == 10 && p == diamond(2)) CHECK(runs == 3003);
    }
  }
}

TEST_CASE("sampled hosts, k = 3") {
  const unsigned n = 12;
  const auto pool = window(n, 3);
  REQUIRE(pool.size() == 20);
  std::mt19937_64 rng(23);
  for (const Poset& p : {chain(2), antichain(3), complete_multilevel({1, 2}), diamond(2)}) {
    const std::size_t need = greedy_threshold(p, 3);
    for (int t = 0; t < 150; ++t) {
      auto pick = pool;
      for (std::size_t i = pick.size(); i > 1; --i) std::swap(pick[i - 1], pick[rng() % i]);
      pick.resize(need);
      const SetFamily host(n, pick);
      const auto r = greedy_embed(host, p, 3);
      check_trace(r, host, p);
      CHECK(r.trace.removal_cap == 8);
    }
  }
}

TEST_CASE("preconditions") {
  const SetFamily host(10, window(10, 2));
  CHECK_THROWS_AS(greedy_embed(host, chain(2), 1), PreconditionViolated);
  CHECK_THROWS_AS(greedy_embed(host.with(Subset::of(10, {2, 3, 4})), chain(2), 2), PreconditionViolated);
  CHECK_THROWS_AS(greedy_embed(host.with(Subset::of(10, {1, 2})), chain(2), 2), PreconditionViolated);
  CHECK_THROWS_AS(greedy_embed(SetFamily(10, {host[0], host[1]}), diamond(2), 2), PreconditionViolated);
}

TEST_CASE("shift into the interior") {
  for (unsigned n = 1; n <= 6; ++n) {
    CHECK(shift_into_interior(Subset(n, 0), 2) == Subset::prefix(n + 4, 3));
    CHECK(shift_into_interior(Subset::full(n), 2) == Subset::prefix(n + 4, n + 3));
  }
  const SetFamily img = shift_into_interior(interval_chain(IntervalChainSpec(4, 2)), 2);
  CHECK(img.n() == 8);
  CHECK(img.size() == 8);
  for (const auto& s : img) {
    CHECK(in_canonical_chain(s, 2));
    CHECK(s.weight() >= 3);
    CHECK(s.weight() <= 7);
  }
  for (unsigned k = 2; k <= 3; ++k) {
    const SetFamily base = interval_chain(IntervalChainSpec(5, k));
    const SetFamily shifted = shift_into_interior(base, k);
    CHECK(shifted.size() == base.size());
    CHECK(isomorphic(shifted.inclusion_poset(), base.inclusion_poset()));
    for (const auto& s : shifted) CHECK(in_canonical_chain(s, k));
  }
}

TEST_CASE("middle levels witness") {
  CHECK(middle_levels_family(4, 1) == SetFamily::levels(4, 2, 2));
  CHECK(middle_levels_family(5, 2) == SetFamily::levels(5, 2, 3));
  CHECK(middle_levels_family(5, 2).size() == 20);
  CHECK(middle_levels_family(6, 2) == SetFamily::levels(6, 2, 3));
  CHECK(middle_levels_family(5, 1) == SetFamily::levels(5, 2, 2));
  CHECK(find_subposet(middle_levels_family(5, 2), complete_multilevel({4, 4, 4}), Mode::Weak) == std::nullopt);
  CHECK(witness_levels(4, 3) == 2);
  CHECK(witness_levels(2, 3) == 1);
  CHECK(witness_levels(8, 4) == 6);
  CHECK_THROWS_AS(witness_levels(3, 3), InvalidParams);
}

TEST_CASE("span certificates") {
  const Poset k222 = complete_multilevel({2, 2, 2});
  const auto e = find_subposet(SetFamily::power_set(4), k222, Mode::Weak);
  REQUIRE(e);
  const auto c = span_certificate(*e);
  CHECK(c.width == 2);
  CHECK(c.height == 3);
  CHECK(c.unions.size() == 2);
  CHECK(c.spanned_levels >= 2);

  for (std::size_t a : {2, 4}) {
    const auto f = find_subposet(SetFamily::power_set(5), complete_multilevel({a, a}), Mode::Weak);
    REQUIRE(f);
    CHECK(span_certificate(*f).spanned_levels >= 1);
  }

  // 2^[6] has no copy at all, so the certificate is vacuous there.
  CHECK(find_subposet(SetFamily::power_set(6), complete_multilevel({4, 4, 4}), Mode::Weak) == std::nullopt);
  std::size_t seen = 0;
  enumerate_embeddings(SetFamily::power_set(7), complete_multilevel({4, 4, 4}), Mode::Weak,
                       [&](const Embedding& emb) {
                         CHECK(span_certificate(emb).spanned_levels >= 3);
                         return ++seen < 500;
                       });
  CHECK(seen == 500);

  // a = 1: chains pass with the trivial certificate.
  const auto ch = find_subposet(SetFamily::power_set(3), complete_multilevel({1, 1, 1}), Mode::Weak);
  REQUIRE(ch);
  const auto cc = span_certificate(*ch);
  CHECK(cc.width == 1);
  CHECK(cc.spanned_levels >= 1);

  Embedding bad = *e;
  std::swap(bad.images[0], bad.images[5]);
  CHECK_THROWS_AS(span_certificate(bad), InvalidEmbedding);
  const auto d = find_subposet(SetFamily::power_set(3), diamond(2), Mode::Weak);
  REQUIRE(d);
  CHECK_THROWS_AS(span_certificate(*d), InvalidEmbedding);
}
