#include "subposet/interval_chain.hpp"

#include "subposet/error.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace subposet {

namespace {

Permutation inverse(const Permutation& p) {
  Permutation inv(p.size());
  for (unsigned i = 0; i < p.size(); ++i) inv[p[i]] = i;
  return inv;
}

void check_permutation(const Permutation& p, unsigned n) {
  if (p.size() != n) throw InvalidParams("base order must list all n elements");
  std::vector<bool> seen(n, false);
  for (unsigned v : p) {
    if (v >= n || seen[v]) throw InvalidParams("base order is not a permutation");
    seen[v] = true;
  }
}

}  // namespace

IntervalChainSpec::IntervalChainSpec(unsigned n, unsigned k)
    : IntervalChainSpec(n, k, identity_permutation(n)) {}

IntervalChainSpec::IntervalChainSpec(unsigned n, unsigned k, Permutation order)
    : n_(n), k_(k), order_(std::move(order)) {
  if (n > kMaxGround) throw InvalidParams("n too large");
  if (k < 1) throw InvalidParams("k must be at least 1");
  if (k > n) throw InvalidParams("k must not exceed n");
  check_permutation(order_, n);
}

IntervalChainSpec IntervalChainSpec::from_base(unsigned k, const std::vector<Subset>& base) {
  if (base.empty()) throw InvalidParams("empty base chain");
  const unsigned n = base.front().n();
  if (base.size() != n + 1) throw InvalidParams("a maximal chain has n+1 sets");
  Permutation order;
  for (unsigned i = 0; i <= n; ++i) {
    if (base[i].weight() != i) throw InvalidParams("base chain set A_i must have size i");
    if (i > 0) {
      if (!base[i - 1].proper_subset_of(base[i])) throw InvalidParams("base chain is not nested");
      std::uint64_t added = base[i].mask() & ~base[i - 1].mask();
      order.push_back(static_cast<unsigned>(std::countr_zero(added)));
    }
  }
  return IntervalChainSpec(n, k, std::move(order));
}

bool IntervalChainSpec::canonical() const {
  for (unsigned i = 0; i < n_; ++i)
    if (order_[i] != i) return false;
  return true;
}

Subset IntervalChainSpec::base_set(unsigned i) const {
  std::uint64_t m = 0;
  for (unsigned j = 0; j < i; ++j) m |= std::uint64_t{1} << order_[j];
  return Subset(n_, m);
}

bool in_canonical_chain(const Subset& s, unsigned k) {
  // Initial run of ones, then at most k positions until the last one.
  const std::uint64_t m = s.mask();
  if (m == 0) return true;
  const unsigned initial_ones = static_cast<unsigned>(std::countr_one(m));
  const unsigned last_one = 64U - static_cast<unsigned>(std::countl_zero(m));  // 1-based
  return last_one <= initial_ones + k;
}

bool IntervalChainSpec::contains(const Subset& s) const {
  if (s.n() != n_) return false;
  if (canonical()) return in_canonical_chain(s, k_);
  // Conjugate back to the canonical base.
  return in_canonical_chain(apply_permutation(s, inverse(order_)), k_);
}

SetFamily interval_chain(const IntervalChainSpec& spec) {
  const unsigned n = spec.n();
  const unsigned k = spec.k();
  std::vector<Subset> canonical_sets;
  for (unsigned i = 0; i + k <= n; ++i) {
    const std::uint64_t low = i == 0 ? 0 : ((std::uint64_t{1} << i) - 1);
    for (std::uint64_t free = 0; free < (std::uint64_t{1} << k); ++free)
      canonical_sets.emplace_back(n, low | (free << i));
  }
  SetFamily fam(n, std::move(canonical_sets));
  if (spec.canonical()) return fam;
  return apply_permutation(fam, spec.order());
}

std::size_t level_count(const IntervalChainSpec& spec, unsigned m) {
  if (m > spec.n()) throw OutOfRange("level above n");
  if (spec.k() <= m && m + spec.k() <= spec.n()) return std::size_t{1} << (spec.k() - 1);
  return interval_chain(spec).level_counts()[m];
}

unsigned zeros_before_last_one(const Subset& s) {
  const std::uint64_t m = s.mask();
  if (m == 0) return 0;
  const unsigned last_one = 63U - static_cast<unsigned>(std::countl_zero(m));  // 0-based
  return last_one - static_cast<unsigned>(std::popcount(m)) + 1;
}

std::size_t count_trailing_zero_profile(const IntervalChainSpec& spec, unsigned m, unsigned j) {
  const unsigned k = spec.k();
  if (m < k || m + k > spec.n())
    throw OutOfRange("m = " + std::to_string(m) + " outside [k, n-k]");
  if (j > k - 1) throw OutOfRange("j must be at most k-1");
  std::size_t total = 0;
  for (unsigned h = j; h <= k - 1; ++h)
    total += static_cast<std::size_t>(binomial(k - 1, h));
  return total;
}

std::size_t count_trailing_zero_profile_enumerated(const IntervalChainSpec& spec, unsigned m,
                                                   unsigned j) {
  if (!spec.canonical()) throw PreconditionViolated("profile counts need the canonical base");
  std::size_t c = 0;
  for (const auto& s : interval_chain(spec))
    if (s.weight() == m && zeros_before_last_one(s) >= j) ++c;
  return c;
}

SetFamily unrelated_below_unchecked(const IntervalChainSpec& spec, unsigned m) {
  const SetFamily chain = interval_chain(spec);
  std::vector<Subset> out;
  for (const auto& low : chain) {
    if (low.weight() + 1 > m) continue;
    for (const auto& high : chain)
      if (high.weight() >= m && !low.related(high)) {
        out.push_back(low);
        break;
      }
  }
  return SetFamily(spec.n(), std::move(out));
}

SetFamily unrelated_below(const IntervalChainSpec& spec, unsigned m) {
  const unsigned k = spec.k();
  if (k < 2) throw OutOfRange("k must be at least 2");
  if (m + 3 < 3 * k || m + k > spec.n() + 1)
    throw OutOfRange("m = " + std::to_string(m) + " outside [3k-3, n-k+1]");
  return unrelated_below_unchecked(spec, m);
}

std::size_t unrelated_count_formula(unsigned k) {
  if (k < 2) throw InvalidParams("k must be at least 2");
  // (3k-5) 2^{k-2}
  return static_cast<std::size_t>(3 * k - 5) << (k - 2);
}

Subset worst_set(const IntervalChainSpec& spec, unsigned m) {
  const unsigned n = spec.n();
  const unsigned k = spec.k();
  if (!spec.canonical()) throw OutOfRange("worst_set is defined for the canonical base");
  if (m + 1 < k || m + 1 > n) throw OutOfRange("m = " + std::to_string(m) + " outside [k-1, n-1]");
  // 1^{m-k+1} 0 1^{k-1} 0^{n-m-1}
  const unsigned head = m - k + 1;
  std::uint64_t mask = (std::uint64_t{1} << head) - 1;
  mask |= ((std::uint64_t{1} << (k - 1)) - 1) << (head + 1);
  return Subset(n, mask);
}

}  // namespace subposet
