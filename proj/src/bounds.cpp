#include "subposet/bounds.hpp"

#include "subposet/error.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <numeric>

namespace subposet {

std::string to_string(Side s) { return s == Side::Upper ? "upper" : "lower"; }

std::string BoundReport::param_string() const {
  std::string out;
  for (const auto& [k, v] : params) {
    if (!out.empty()) out += ";";
    out += k + "=" + v;
  }
  return out;
}

const std::string* BoundReport::param(const std::string& key) const {
  for (const auto& [k, v] : params)
    if (k == key) return &v;
  return nullptr;
}

namespace {

void check_poset_params(std::size_t size_p, std::size_t h) {
  if (size_p < 1) throw InvalidParams("|P| must be at least 1");
  if (h < 1 || h > size_p) throw InvalidParams("height must satisfy 1 <= h <= |P|");
}

Rational R(std::size_t v) { return Rational(static_cast<long long>(v)); }

std::string S(std::size_t v) { return std::to_string(v); }

}  // namespace

BoundReport bound_burcsi_nagy(std::size_t size_p, std::size_t h) {
  check_poset_params(size_p, h);
  Rational c = (R(size_p) + R(h)) / 2 - 1;
  return {"burcsi_nagy", Real(c), {{"sizeP", S(size_p)}, {"h", S(h)}}, Side::Upper};
}

BoundReport bound_chen_li(std::size_t size_p, std::size_t h, std::size_t m) {
  check_poset_params(size_p, h);
  if (m < 1) throw InvalidParams("m must be at least 1");
  const Rational mm = R(m);
  Rational inner = R(size_p) + (mm * mm + 3 * mm - 2) * (R(h) - 1) / 2 - 1;
  return {"chen_li", Real(inner / (mm + 1)), {{"sizeP", S(size_p)}, {"h", S(h)}, {"m", S(m)}},
          Side::Upper};
}

BoundReport bound_main(std::size_t size_p, std::size_t h, std::size_t k) {
  check_poset_params(size_p, h);
  if (k < 2) throw InvalidParams("k must be at least 2");
  const BigInt half = pow2(static_cast<unsigned>(k - 2));
  Rational inner = R(size_p) + Rational((3 * static_cast<long long>(k) - 5) * half) * (R(h) - 1) - 1;
  return {"main", Real(inner / Rational(half * 2)),
          {{"sizeP", S(size_p)}, {"h", S(h)}, {"k", S(k)}}, Side::Upper};
}

std::size_t main_k_sweep_limit(std::size_t size_p) {
  return 2 + static_cast<std::size_t>(ceil_log2(R(size_p) + 2));
}

BoundReport best_main_k(std::size_t size_p, std::size_t h) {
  check_poset_params(size_p, h);
  const std::size_t kmax = main_k_sweep_limit(size_p);
  BoundReport best = bound_main(size_p, h, 2);
  std::size_t arg = 2;
  for (std::size_t k = 3; k <= kmax; ++k) {
    BoundReport b = bound_main(size_p, h, k);
    if (*b.coefficient.exact() < *best.coefficient.exact()) {
      best = b;
      arg = k;
    }
  }
  // For h >= 2 the sweep limit is past the minimum.
  if (h >= 2 && arg == kmax) throw InternalExhaustion("best_main_k minimum not interior");
  BoundReport out{"best_main_k", best.coefficient,
                  {{"sizeP", S(size_p)}, {"h", S(h)}, {"k", S(arg)}, {"k_max", S(kmax)}},
                  Side::Upper};
  const long prescribed = ceil_log2(R(size_p) / R(h));
  out.params.emplace_back("k_prescribed", std::to_string(prescribed));
  if (prescribed >= 2) {
    out.params.emplace_back("prescribed_coefficient",
                            bound_main(size_p, h, static_cast<std::size_t>(prescribed)).coefficient.str());
  } else {
    out.params.emplace_back("fallback", "chain");
    out.params.emplace_back("fallback_coefficient", S(size_p - 1));
  }
  return out;
}

BoundReport bound_corollary_interval(std::size_t size_p, std::size_t h) {
  check_poset_params(size_p, h);
  BoundReport out{"corollary_interval", Real(0), {{"sizeP", S(size_p)}, {"h", S(h)}}, Side::Upper};
  if (size_p > 2 * h) {
    const Real hh(R(h));
    out.coefficient = Real(Rational(3, 2)) * Real::log2((R(size_p) / R(h))) * hh +
                      Real(Rational(7, 2)) * hh;
    out.params.emplace_back("branch", "log");
  } else {
    out.coefficient = Real(R(size_p) - 1);
    out.params.emplace_back("branch", "chain");
  }
  return out;
}

BoundReport bound_diamond_layer(std::size_t a) {
  if (a < 1) throw InvalidParams("layer width must be at least 1");
  return {"diamond_layer", Real::log2(R(a) + 2) + Real(2), {{"a", S(a)}}, Side::Upper};
}

BoundReport bound_dk(std::size_t k) {
  if (k < 2) throw InvalidParams("generalized diamond bound needs k >= 2");
  BoundReport b = bound_diamond_layer(k);
  b.name = "dk";
  b.params = {{"k", S(k)}};
  return b;
}

DiamondCorollary bound_corollary_diamond(const std::vector<std::size_t>& layer_sizes) {
  if (layer_sizes.empty()) throw InvalidParams("need at least one layer");
  for (std::size_t a : layer_sizes)
    if (a < 1) throw InvalidParams("layer widths must be at least 1");

  std::string layers;
  for (std::size_t a : layer_sizes) layers += (layers.empty() ? "" : ",") + S(a);

  Real sum(0);
  for (std::size_t a : layer_sizes) sum = sum + bound_diamond_layer(a).coefficient;

  const std::size_t h = layer_sizes.size();
  const std::size_t total = std::accumulate(layer_sizes.begin(), layer_sizes.end(), std::size_t{0});
  Real jensen = Real(R(h)) * Real::log2((R(total) / R(h)) + 2) + Real(R(2 * h));

  DiamondCorollary out;
  out.all_layers_equal = std::all_of(layer_sizes.begin(), layer_sizes.end(),
                                     [&](std::size_t a) { return a == layer_sizes[0]; });
  out.sum = {"corollary_diamond_sum", sum, {{"layers", layers}}, Side::Upper};
  out.jensen = {"corollary_diamond_jensen", jensen, {{"layers", layers}}, Side::Upper};
  if (!out.all_layers_equal && !definitely_less(sum, jensen))
    throw InternalExhaustion("diamond sum is not below its Jensen form");
  if (out.all_layers_equal && compare(jensen, sum) == Ordering::Less)
    throw InternalExhaustion("diamond sum exceeds its Jensen form");
  return out;
}

BoundReport bound_product_composition(const std::vector<BoundReport>& parts) {
  if (parts.empty()) throw InvalidParams("composition needs at least one part");
  if (parts.size() == 1) return parts[0];
  Real total(0);
  std::string names;
  for (const auto& p : parts) {
    total = total + p.coefficient;
    names += (names.empty() ? "" : "+") + p.name + "(" + p.param_string() + ")";
  }
  return {"product_composition", total, {{"parts", names}}, Side::Upper};
}

BoundReport lower_bound_complete_multilevel(std::size_t a, std::size_t h) {
  BoundReport out{"lower_complete_multilevel", Real(0), {{"a", S(a)}, {"h", S(h)}}, Side::Lower};
  if (a >= 2 && h >= 3) out.coefficient = Real(R(h - 2)) * Real::log2(R(a));
  return out;
}

bool boundary_condition_holds(unsigned n, unsigned k) {
  if (k < 2) throw InvalidParams("k must be at least 2");
  const BigInt middle = binomial(n, n / 2);
  const BigInt factor = pow2(k - 1);
  for (unsigned j = 0; j <= n; ++j) {
    if (j >= k && j + k <= n) continue;
    if (factor * binomial(n, j) > middle) return false;
  }
  return true;
}

unsigned min_valid_n(unsigned k) {
  if (k < 2) throw InvalidParams("k must be at least 2");
  for (unsigned n = 1;; ++n)
    if (boundary_condition_holds(n, k)) return n;
}

Rational induced_exponent(std::size_t i) {
  const BigInt p = pow2(static_cast<unsigned>(i));
  return Rational(p, 2 * p - 1);
}

Decimal central_binomial_factor() {
  static const Decimal v =
      2 * boost::multiprecision::sqrt(Decimal(2)) / boost::multiprecision::sqrt(boost::math::constants::pi<Decimal>());
  return v;
}

InducedExponentTrace induced_exponent_chain(const Rational& target, const Rational& interval_constant) {
  if (target <= Rational(1, 2)) throw InvalidParams("target exponent must exceed 1/2");
  InducedExponentTrace t;
  t.target = target;
  t.interval_constant = interval_constant;
  t.exponents.push_back(1);
  t.central_multiplier.push_back(0);
  t.recursive_multiplier.push_back(1);  // l_n <= m levels at c = 1
  const Decimal central = central_binomial_factor() * to_decimal(interval_constant);
  t.constant.push_back(1);
  while (t.exponents.back() >= target) {
    const Rational& c = t.exponents.back();
    t.exponents.push_back(2 * c / (2 * c + 1));
    t.central_multiplier.push_back(t.central_multiplier.back() * 2 + 1);
    t.recursive_multiplier.push_back(t.recursive_multiplier.back() * 2);
    t.constant.push_back(Decimal(t.central_multiplier.back()) * central +
                         Decimal(t.recursive_multiplier.back()));
  }
  t.steps = t.exponents.size() - 1;
  return t;
}

}  // namespace subposet
