#include "subposet/family.hpp"

#include "subposet/error.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace subposet {

namespace {

std::uint64_t ground_mask(unsigned n) {
  return n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

void check_ground(unsigned n) {
  if (n > kMaxGround) throw InvalidParams("ground set larger than " + std::to_string(kMaxGround));
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Subset::Subset(unsigned n, std::uint64_t mask) : n_(n), mask_(mask) {
  check_ground(n);
  if ((mask & ~ground_mask(n)) != 0) throw InvalidParams("subset mask exceeds [n]");
}

Subset Subset::of(unsigned n, std::initializer_list<unsigned> elements) {
  return of(n, std::vector<unsigned>(elements));
}

Subset Subset::of(unsigned n, const std::vector<unsigned>& elements) {
  check_ground(n);
  std::uint64_t mask = 0;
  for (unsigned e : elements) {
    if (e < 1 || e > n)
      throw InvalidParams("element " + std::to_string(e) + " outside [" + std::to_string(n) + "]");
    mask |= std::uint64_t{1} << (e - 1);
  }
  return Subset(n, mask);
}

Subset Subset::prefix(unsigned n, unsigned i) {
  check_ground(n);
  if (i > n) throw InvalidParams("prefix longer than n");
  return Subset(n, ground_mask(i));
}

std::vector<unsigned> Subset::elements() const {
  std::vector<unsigned> out;
  for (unsigned i = 0; i < n_; ++i)
    if ((mask_ >> i) & 1U) out.push_back(i + 1);
  return out;
}

std::string Subset::indicator() const {
  std::string s(n_, '0');
  for (unsigned i = 0; i < n_; ++i)
    if ((mask_ >> i) & 1U) s[i] = '1';
  return s;
}

std::string Subset::str() const {
  std::string s = "{";
  bool first = true;
  for (unsigned e : elements()) {
    if (!first) s += ",";
    s += std::to_string(e);
    first = false;
  }
  return s + "}";
}

bool canonical_less(const Subset& a, const Subset& b) {
  if (a.weight() != b.weight()) return a.weight() < b.weight();
  return a.mask() < b.mask();
}

Permutation identity_permutation(unsigned n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0U);
  return p;
}

Subset apply_permutation(const Subset& s, const Permutation& pi) {
  if (pi.size() != s.n()) throw InvalidParams("permutation size differs from n");
  std::uint64_t out = 0;
  for (unsigned i = 0; i < s.n(); ++i)
    if ((s.mask() >> i) & 1U) out |= std::uint64_t{1} << pi[i];
  return Subset(s.n(), out);
}

SetFamily::SetFamily(unsigned n, std::vector<Subset> sets) : n_(n), sets_(std::move(sets)) {
  check_ground(n);
  for (const auto& s : sets_)
    if (s.n() != n) throw InvalidParams("family members must share the ground set");
  std::sort(sets_.begin(), sets_.end(), canonical_less);
  sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

SetFamily SetFamily::power_set(unsigned n) { return levels(n, 0, n); }

SetFamily SetFamily::levels(unsigned n, unsigned lo, unsigned hi) {
  check_ground(n);
  if (n > 24) throw InvalidParams("power-set enumeration limited to n <= 24");
  std::vector<Subset> sets;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    auto w = static_cast<unsigned>(std::popcount(m));
    if (w >= lo && w <= hi) sets.emplace_back(n, m);
  }
  return SetFamily(n, std::move(sets));
}

bool SetFamily::contains(const Subset& s) const { return index_of(s) != size(); }

std::size_t SetFamily::index_of(const Subset& s) const {
  auto it = std::lower_bound(sets_.begin(), sets_.end(), s, canonical_less);
  if (it != sets_.end() && *it == s) return static_cast<std::size_t>(it - sets_.begin());
  return size();
}

std::vector<std::size_t> SetFamily::level_counts() const {
  std::vector<std::size_t> counts(n_ + 1, 0);
  for (const auto& s : sets_) ++counts[s.weight()];
  return counts;
}

SetFamily SetFamily::subfamily(const std::vector<std::size_t>& indices) const {
  std::vector<Subset> out;
  out.reserve(indices.size());
  for (std::size_t i : indices) out.push_back(sets_.at(i));
  return SetFamily(n_, std::move(out));
}

SetFamily SetFamily::with(const Subset& s) const {
  auto v = sets_;
  v.push_back(s);
  return SetFamily(n_, std::move(v));
}

SetFamily SetFamily::without(const Subset& s) const {
  auto v = sets_;
  v.erase(std::remove(v.begin(), v.end(), s), v.end());
  return SetFamily(n_, std::move(v));
}

Poset SetFamily::inclusion_poset() const {
  const std::size_t m = sets_.size();
  std::vector<Bits> up(m, Bits(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (sets_[i].proper_subset_of(sets_[j])) up[i].set(j);
  return Poset::from_up_sets(std::move(up));
}

Rational lubell(const SetFamily& fam) {
  Rational total = 0;
  for (const auto& s : fam) total += Rational(1, binomial(fam.n(), s.weight()));
  return total;
}

SetFamily apply_permutation(const SetFamily& fam, const Permutation& pi) {
  std::vector<Subset> out;
  out.reserve(fam.size());
  for (const auto& s : fam) out.push_back(apply_permutation(s, pi));
  return SetFamily(fam.n(), std::move(out));
}

BigInt permutation_hit_count(const SetFamily& host, const Subset& a) {
  if (host.n() != a.n()) throw InvalidParams("host and set live on different ground sets");
  const unsigned w = a.weight();
  return BigInt(host.level_counts()[w]) * factorial(w) * factorial(a.n() - w);
}

BigInt permutation_hit_count_exhaustive(const SetFamily& host, const Subset& a) {
  if (host.n() != a.n()) throw InvalidParams("host and set live on different ground sets");
  if (a.n() > 10) throw InvalidParams("exhaustive permutation walk limited to n <= 10");
  Permutation pi = identity_permutation(a.n());
  BigInt hits = 0;
  do {
    for (const auto& s : host)
      if (apply_permutation(s, pi) == a) {
        ++hits;
        break;
      }
  } while (std::next_permutation(pi.begin(), pi.end()));
  return hits;
}

void write_family(std::ostream& os, const SetFamily& fam) {
  os << "n=" << fam.n() << '\n';
  for (const auto& s : fam) {
    if (s.weight() == 0) {
      os << "{}\n";
      continue;
    }
    bool first = true;
    for (unsigned e : s.elements()) {
      if (!first) os << ',';
      os << e;
      first = false;
    }
    os << '\n';
  }
}

SetFamily read_family(std::istream& is) {
  std::string line;
  std::size_t lineno = 0;
  do {
    if (!std::getline(is, line)) throw ParseError("empty family file");
    ++lineno;
    line = trim(line);
  } while (line.empty() || line[0] == '#');
  if (line.rfind("n=", 0) != 0) throw ParseError("family file must start with 'n=<N>'");
  unsigned n = 0;
  try {
    std::size_t used = 0;
    const std::string num = line.substr(2);
    n = static_cast<unsigned>(std::stoul(num, &used));
    if (used != num.size()) throw std::invalid_argument(num);
  } catch (const std::exception&) {
    throw ParseError("bad ground-set size '" + line + "'");
  }
  if (n > kMaxGround) throw ParseError("ground set larger than " + std::to_string(kMaxGround));
  std::vector<Subset> sets;
  while (std::getline(is, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (line == "{}") {
      sets.emplace_back(n, 0);
      continue;
    }
    std::vector<unsigned> elems;
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      tok = trim(tok);
      try {
        std::size_t used = 0;
        elems.push_back(static_cast<unsigned>(std::stoul(tok, &used)));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineno) + ": bad element '" + tok + "'");
      }
    }
    try {
      sets.push_back(Subset::of(n, elems));
    } catch (const InvalidParams& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return SetFamily(n, std::move(sets));
}

SetFamily load_family(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open family file '" + path + "'");
  return read_family(in);
}

void save_family(const std::string& path, const SetFamily& fam) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write family file '" + path + "'");
  write_family(out, fam);
}

}  // namespace subposet
