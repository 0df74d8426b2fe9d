#pragma once

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace subposet {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Decimal = boost::multiprecision::cpp_dec_float_50;

/// Digits reported for decimal coefficients.
inline constexpr int kDecimalDigits = 50;

BigInt binomial(unsigned n, unsigned k);
BigInt factorial(unsigned n);
BigInt pow2(unsigned e);

/// "p/q" (or "p" when q == 1).
std::string to_string(const Rational& r);
std::string to_string(const BigInt& v);
/// Fixed-point rendering with `digits` fractional digits.
std::string to_string(const Decimal& d, int digits = 12);

Rational parse_rational(const std::string& text);
Decimal to_decimal(const Rational& r);

/// Exact log2 when both numerator and denominator are powers of two.
std::optional<Rational> exact_log2(const Rational& x);

/// ceil(log2(x)) for a positive rational, computed exactly.
long ceil_log2(const Rational& x);

/// A real number known either exactly or as a decimal enclosure
/// [value - radius, value + radius].
class Real {
 public:
  Real() = default;
  Real(const Rational& exact);  // NOLINT(google-explicit-constructor)
  Real(long v) : Real(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  static Real approx(const Decimal& value, const Decimal& radius);
  /// log2 of a positive rational; exact for powers of two.
  static Real log2(const Rational& x);

  bool is_exact() const { return exact_.has_value(); }
  const std::optional<Rational>& exact() const { return exact_; }
  const Decimal& value() const { return value_; }
  const Decimal& radius() const { return radius_; }
  Decimal lower() const { return value_ - radius_; }
  Decimal upper() const { return value_ + radius_; }

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);

  /// Human-readable form: exact rational, or decimal at 50 digits.
  std::string str() const;

 private:
  std::optional<Rational> exact_;
  Decimal value_{0};
  Decimal radius_{0};
};

/// Three-valued comparison at the enclosure precision.
enum class Ordering { Less, Equal, Greater, Unknown };
Ordering compare(const Real& a, const Real& b);
/// True only when a < b is certain.
bool definitely_less(const Real& a, const Real& b);
/// True only when a <= b is certain.
bool definitely_leq(const Real& a, const Real& b);

}  // namespace subposet
