#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracle.hpp"
#include "subposet/error.hpp"
#include "subposet/interval_chain.hpp"

using namespace subposet;

namespace {

std::vector<std::uint64_t> masks(const SetFamily& f) {
  std::vector<std::uint64_t> out;
  for (const auto& s : f) out.push_back(s.mask());
  std::sort(out.begin(), out.end());
  return out;
}

// Definition-level count: smaller chain members unrelated to a member of size >= m.
std::size_t unrelated_oracle(unsigned n, unsigned k, unsigned m) {
  const auto c = oracle::canonical_chain_masks(n, k);
  std::size_t count = 0;
  for (auto a : c) {
    if (static_cast<unsigned>(__builtin_popcountll(a)) >= m) continue;
    for (auto b : c)
      if (static_cast<unsigned>(__builtin_popcountll(b)) >= m && (a & ~b) != 0 && (b & ~a) != 0) {
        ++count;
        break;
      }
  }
  return count;
}

}  // namespace

TEST_CASE("interval chain matches the union-of-intervals definition") {
  for (unsigned n = 1; n <= 9; ++n)
    for (unsigned k = 1; k <= n; ++k) {
      auto expect = oracle::canonical_chain_masks(n, k);
      std::sort(expect.begin(), expect.end());
      const SetFamily c = interval_chain(IntervalChainSpec(n, k));
      CHECK(masks(c) == expect);
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
        CHECK(in_canonical_chain(Subset(n, s), k) == std::binary_search(expect.begin(), expect.end(), s));
    }
}

TEST_CASE("interval chain examples") {
  CHECK(interval_chain(IntervalChainSpec(6, 1)).size() == 7);
  const SetFamily c = interval_chain(IntervalChainSpec(4, 2));
  const SetFamily expect(4, {Subset(4, 0), Subset::of(4, {1}), Subset::of(4, {2}), Subset::of(4, {1, 2}),
                             Subset::of(4, {1, 3}), Subset::of(4, {1, 2, 3}), Subset::of(4, {1, 2, 4}),
                             Subset::full(4)});
  CHECK(c == expect);
  CHECK(interval_chain(IntervalChainSpec(5, 5)) == SetFamily::power_set(5));
  CHECK_THROWS(IntervalChainSpec(3, 0));
  CHECK_THROWS(IntervalChainSpec(3, 4));
}

TEST_CASE("non-canonical bases") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 40; ++t) {
    const unsigned n = 2 + static_cast<unsigned>(rng() % 6);
    const unsigned k = 1 + static_cast<unsigned>(rng() % n);
    const auto order = oracle::random_permutation(rng, n);
    const IntervalChainSpec spec(n, k, order);
    auto expect = oracle::interval_chain_masks(n, k, order);
    std::sort(expect.begin(), expect.end());
    CHECK(masks(interval_chain(spec)) == expect);
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
      CHECK(spec.contains(Subset(n, s)) == std::binary_search(expect.begin(), expect.end(), s));

    std::vector<Subset> base;
    for (unsigned i = 0; i <= n; ++i) base.push_back(spec.base_set(i));
    const auto rebuilt = IntervalChainSpec::from_base(k, base);
    CHECK(rebuilt.order() == order);
  }
  CHECK_THROWS(IntervalChainSpec::from_base(1, {Subset(2, 0), Subset::of(2, {1, 2}), Subset::full(2)}));
}

TEST_CASE("level counts") {
  CHECK(level_count(IntervalChainSpec(10, 3), 5) == 4);
  CHECK(level_count(IntervalChainSpec(4, 2), 0) == 1);
  const auto counts = interval_chain(IntervalChainSpec(12, 4)).level_counts();
  CHECK(level_count(IntervalChainSpec(12, 4), 2) == counts[2]);
  for (unsigned n = 1; n <= 12; ++n)
    for (unsigned k = 1; k <= n; ++k) {
      const auto lc = interval_chain(IntervalChainSpec(n, k)).level_counts();
      for (unsigned m = 0; m <= n; ++m) CHECK(level_count(IntervalChainSpec(n, k), m) == lc[m]);
    }
}

TEST_CASE("zero profiles") {
  const IntervalChainSpec s3(10, 3);
  CHECK(count_trailing_zero_profile(s3, 5, 0) == 4);
  CHECK(count_trailing_zero_profile(s3, 5, 1) == 3);
  CHECK(count_trailing_zero_profile(IntervalChainSpec(12, 4), 6, 2) == 4);
  CHECK(count_trailing_zero_profile_enumerated(IntervalChainSpec(12, 4), 6, 2) == 4);
  CHECK_THROWS_AS(count_trailing_zero_profile(s3, 2, 0), OutOfRange);
  CHECK_THROWS_AS(count_trailing_zero_profile(s3, 5, 3), OutOfRange);
  CHECK(zeros_before_last_one(Subset::of(6, {1, 3, 5})) == 2);
  CHECK(zeros_before_last_one(Subset(6, 0)) == 0);
}

TEST_CASE("unrelated sets") {
  const SetFamily u = unrelated_below(IntervalChainSpec(4, 2), 3);
  CHECK(u == SetFamily(4, {Subset::of(4, {1, 3})}));
  CHECK(unrelated_count_formula(2) == 1);
  CHECK(unrelated_count_formula(3) == 8);
  CHECK(unrelated_count_formula(4) == 28);
  for (unsigned k = 2; k <= 4; ++k)
    for (unsigned n = k; n <= 13; ++n)
      for (unsigned m = 3 * k - 3; m + k <= n + 1; ++m) {
        const std::size_t got = unrelated_below(IntervalChainSpec(n, k), m).size();
        CHECK(got == unrelated_count_formula(k));
        CHECK(got == unrelated_oracle(n, k, m));
      }
  CHECK_THROWS_AS(unrelated_below(IntervalChainSpec(10, 3), 5), OutOfRange);
  CHECK_THROWS_AS(unrelated_below(IntervalChainSpec(10, 1), 5), OutOfRange);
  CHECK(unrelated_below_unchecked(IntervalChainSpec(10, 3), 5).size() == unrelated_oracle(10, 3, 5));
}

TEST_CASE("worst set") {
  CHECK(worst_set(IntervalChainSpec(4, 2), 3) == Subset::of(4, {1, 2, 4}));
  CHECK(worst_set(IntervalChainSpec(4, 2), 3).indicator() == "1101");
  for (unsigned m = 0; m < 6; ++m) CHECK(worst_set(IntervalChainSpec(6, 1), m) == Subset::prefix(6, m));
  const Subset w = worst_set(IntervalChainSpec(10, 3), 5);
  CHECK(w.indicator() == "1110110000");
  CHECK(w.weight() == 5);
  CHECK(in_canonical_chain(w, 3));
  CHECK_THROWS(worst_set(IntervalChainSpec(10, 3, {1, 0, 2, 3, 4, 5, 6, 7, 8, 9}), 5));
  CHECK_THROWS_AS(worst_set(IntervalChainSpec(10, 3), 1), OutOfRange);
  CHECK_THROWS_AS(worst_set(IntervalChainSpec(10, 3), 10), OutOfRange);
}
