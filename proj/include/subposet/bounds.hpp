#pragma once

#include "subposet/arith.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace subposet {

enum class Side { Upper, Lower };
std::string to_string(Side s);

/// A bound on La(n, P) written as coefficient * binom(n, floor(n/2)).
struct BoundReport {
  std::string name;
  /// Exact when the formula is rational, otherwise a 50-digit enclosure.
  Real coefficient;
  /// Parameters that produced the value, in insertion order.
  std::vector<std::pair<std::string, std::string>> params;
  Side side = Side::Upper;

  std::string param_string() const;
  const std::string* param(const std::string& key) const;
};

/// ((|P| + h) / 2 - 1)
BoundReport bound_burcsi_nagy(std::size_t size_p, std::size_t h);
/// (1/(m+1)) (|P| + (m^2 + 3m - 2)(h - 1)/2 - 1)
BoundReport bound_chen_li(std::size_t size_p, std::size_t h, std::size_t m);
/// (1/2^{k-1}) (|P| + (3k-5) 2^{k-2} (h - 1) - 1)
BoundReport bound_main(std::size_t size_p, std::size_t h, std::size_t k);

/// Sweep limit for best_main_k: 2 + ceil(log2(|P| + 2)).
std::size_t main_k_sweep_limit(std::size_t size_p);

/// Minimum of bound_main over k = 2..sweep limit (smallest k on ties).
/// Params carry the argmin `k`, the prescribed `k_prescribed` =
/// ceil(log2(|P|/h)), and, when that is below 2, the chain fallback |P|-1.
BoundReport best_main_k(std::size_t size_p, std::size_t h);

/// (3/2) log2(|P|/h) h + 3.5 h when |P| > 2h, else |P| - 1.
BoundReport bound_corollary_interval(std::size_t size_p, std::size_t h);

/// log2(a + 2) + 2, the generalized-diamond term (valid for a >= 1).
BoundReport bound_diamond_layer(std::size_t a);
/// Same value, restricted to the k >= 2 range of the generalized-diamond theorem.
BoundReport bound_dk(std::size_t k);

struct DiamondCorollary {
  /// Sum over layers of (log2(a_i + 2) + 2).
  BoundReport sum;
  /// h log2(|P|/h + 2) + 2h.
  BoundReport jensen;
  bool all_layers_equal = false;
};
DiamondCorollary bound_corollary_diamond(const std::vector<std::size_t>& layer_sizes);

/// Sum of the part coefficients (upper bound for the poset product).
BoundReport bound_product_composition(const std::vector<BoundReport>& parts);

/// (h - 2) log2 a for K_{a,...,a}; 0 when a < 2 or h < 3.
BoundReport lower_bound_complete_multilevel(std::size_t a, std::size_t h);

/// Least n with 2^{k-1} binom(n, j) <= binom(n, floor(n/2)) for all j < k
/// and all j > n - k.
unsigned min_valid_n(unsigned k);
/// The boundary condition at a given n.
bool boundary_condition_holds(unsigned n, unsigned k);

/// c_0 = 1, c_{i+1} = 2 c_i / (2 c_i + 1), with the constant ledger of the
/// exponent recursion.
struct InducedExponentTrace {
  Rational target;
  /// Minimal i with c_i < target.
  std::size_t steps = 0;
  std::vector<Rational> exponents;
  /// After step i the Lubell bound reads K_i m^{c_i} with
  /// K_i = central_multiplier[i] * (2 sqrt 2 / sqrt pi) C + recursive_multiplier[i].
  /// Each step adds one (2 sqrt 2 / sqrt pi) C term and doubles the rest.
  std::vector<BigInt> central_multiplier;
  std::vector<BigInt> recursive_multiplier;
  /// C used for the numeric ledger.
  Rational interval_constant = 1;
  std::vector<Decimal> constant;
};

/// 2 sqrt(2) / sqrt(pi).
Decimal central_binomial_factor();

/// Throws InvalidParams when target <= 1/2.
InducedExponentTrace induced_exponent_chain(const Rational& target,
                                            const Rational& interval_constant = 1);
/// c_i = 2^i / (2^{i+1} - 1).
Rational induced_exponent(std::size_t i);

}  // namespace subposet
