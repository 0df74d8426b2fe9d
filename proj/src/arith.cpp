#include "subposet/arith.hpp"

#include "subposet/error.hpp"

#include <sstream>
#include <vector>

namespace subposet {

namespace {

// Rounding slack added to every inexact operation; well above the
// working precision of cpp_dec_float_50.
const Decimal& rounding_slack() {
  static const Decimal slack("1e-46");
  return slack;
}

Decimal slack_for(const Decimal& v) {
  using boost::multiprecision::abs;
  Decimal mag = abs(v);
  return rounding_slack() * (mag > 1 ? mag : Decimal(1));
}

bool is_power_of_two(const BigInt& v) {
  return v > 0 && (v & (v - 1)) == 0;
}

}  // namespace

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt pow2(unsigned e) {
  BigInt r = 1;
  r <<= e;
  return r;
}

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_string(const Decimal& d, int digits) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(digits);
  os << d;
  return os.str();
}

namespace {

// Plain decimal; BigInt's string constructor would read "051" as octal.
BigInt parse_decimal_int(std::string t, bool allow_sign) {
  bool neg = false;
  if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) {
    neg = t[0] == '-';
    t.erase(0, 1);
  }
  if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos) throw std::runtime_error(t);
  const auto nz = t.find_first_not_of('0');
  BigInt v = nz == std::string::npos ? BigInt(0) : BigInt(t.substr(nz));
  return neg ? BigInt(-v) : v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      const auto dot = text.find('.');
      if (dot == std::string::npos) return Rational(parse_decimal_int(text, true));
      const std::string frac = text.substr(dot + 1);
      std::string whole = text.substr(0, dot);
      const bool neg = !whole.empty() && whole[0] == '-';
      if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) whole.erase(0, 1);
      if (whole.empty() && frac.empty()) throw std::runtime_error(text);
      const BigInt w = whole.empty() ? BigInt(0) : parse_decimal_int(whole, false);
      const BigInt f = frac.empty() ? BigInt(0) : parse_decimal_int(frac, false);
      BigInt den = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
      Rational r = Rational(w) + Rational(f) / Rational(den);
      return neg ? Rational(-r) : r;
    }
    const BigInt den = parse_decimal_int(text.substr(slash + 1), false);
    if (den == 0) throw ParseError("zero denominator in '" + text + "'");
    return Rational(parse_decimal_int(text.substr(0, slash), true)) / Rational(den);
  } catch (const ParseError&) {
    throw;
  } catch (const std::runtime_error&) {
    throw ParseError("not a rational: '" + text + "'");
  }
}

Decimal to_decimal(const Rational& r) {
  return Decimal(boost::multiprecision::numerator(r)) /
         Decimal(boost::multiprecision::denominator(r));
}

std::optional<Rational> exact_log2(const Rational& x) {
  BigInt num = boost::multiprecision::numerator(x);
  BigInt den = boost::multiprecision::denominator(x);
  if (!is_power_of_two(num) || !is_power_of_two(den)) return std::nullopt;
  long e = static_cast<long>(boost::multiprecision::msb(num)) -
           static_cast<long>(boost::multiprecision::msb(den));
  return Rational(e);
}

long ceil_log2(const Rational& x) {
  if (x <= 0) throw InvalidParams("ceil_log2 of a non-positive value");
  // Smallest e with 2^e >= x.
  long e = 0;
  if (x >= 1) {
    Rational p = 1;
    while (p < x) {
      p *= 2;
      ++e;
    }
  } else {
    Rational p = 1;
    while (p / 2 >= x) {
      p /= 2;
      --e;
    }
  }
  return e;
}

Real::Real(const Rational& exact) : exact_(exact), value_(to_decimal(exact)) {}

Real Real::approx(const Decimal& value, const Decimal& radius) {
  Real r;
  r.value_ = value;
  r.radius_ = radius;
  return r;
}

Real Real::log2(const Rational& x) {
  if (x <= 0) throw InvalidParams("log2 of a non-positive value");
  if (auto e = exact_log2(x)) return Real(*e);
  static const Decimal ln2 = boost::multiprecision::log(Decimal(2));
  Decimal v = boost::multiprecision::log(to_decimal(x)) / ln2;
  return approx(v, slack_for(v) * 4);
}

Real operator+(const Real& a, const Real& b) {
  if (a.exact_ && b.exact_) return Real(*a.exact_ + *b.exact_);
  Decimal v = a.value_ + b.value_;
  return Real::approx(v, a.radius_ + b.radius_ + slack_for(v));
}

Real operator-(const Real& a, const Real& b) {
  if (a.exact_ && b.exact_) return Real(*a.exact_ - *b.exact_);
  Decimal v = a.value_ - b.value_;
  return Real::approx(v, a.radius_ + b.radius_ + slack_for(v));
}

Real operator*(const Real& a, const Real& b) {
  using boost::multiprecision::abs;
  if (a.exact_ && b.exact_) return Real(*a.exact_ * *b.exact_);
  Decimal v = a.value_ * b.value_;
  Decimal r = abs(a.value_) * b.radius_ + abs(b.value_) * a.radius_ +
              a.radius_ * b.radius_;
  return Real::approx(v, r + slack_for(v));
}

Real operator/(const Real& a, const Real& b) {
  using boost::multiprecision::abs;
  if (b.exact_ && *b.exact_ == 0) throw InvalidParams("division by zero");
  if (a.exact_ && b.exact_) return Real(*a.exact_ / *b.exact_);
  Decimal lo = abs(b.value_) - b.radius_;
  if (lo <= 0) throw InvalidParams("division by an enclosure containing zero");
  Decimal v = a.value_ / b.value_;
  Decimal r = (a.radius_ + abs(v) * b.radius_) / lo;
  return Real::approx(v, r + slack_for(v));
}

std::string Real::str() const {
  if (exact_) return to_string(*exact_);
  return to_string(value_, kDecimalDigits);
}

Ordering compare(const Real& a, const Real& b) {
  if (a.is_exact() && b.is_exact()) {
    if (*a.exact() < *b.exact()) return Ordering::Less;
    if (*a.exact() > *b.exact()) return Ordering::Greater;
    return Ordering::Equal;
  }
  if (a.upper() < b.lower()) return Ordering::Less;
  if (a.lower() > b.upper()) return Ordering::Greater;
  return Ordering::Unknown;
}

bool definitely_less(const Real& a, const Real& b) {
  return compare(a, b) == Ordering::Less;
}

bool definitely_leq(const Real& a, const Real& b) {
  auto o = compare(a, b);
  return o == Ordering::Less || o == Ordering::Equal;
}

}  // namespace subposet
