#pragma once

// Exact rational reference used by the test suites to define "correctly
// rounded". It shares nothing with the decimal limb kernel: integers come from
// Boost.Multiprecision, and the only contact with basic_decimal is through
// normalize() and the digit/exponent accessors.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "noz/context.hpp"
#include "noz/decimal.hpp"
#include "noz/error.hpp"

namespace noz::oracle {

using integer = boost::multiprecision::cpp_int;

inline integer pow10(std::uint64_t k) {
  integer r = 1;
  integer ten = 10;
  while (k != 0) {
    if (k & 1) r *= ten;
    ten *= ten;
    k >>= 1;
  }
  return r;
}

inline std::uint64_t decimal_digits(const integer& v) {
  return v == 0 ? 1 : static_cast<std::uint64_t>(integer(abs(v)).str().size());
}

/// Always in lowest terms with a positive denominator; zero is 0/1.
class rational {
 public:
  rational() = default;
  rational(integer numerator) : num_(std::move(numerator)) {}  // NOLINT: implicit by design of the oracle API
  rational(integer numerator, integer denominator) : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_ == 0) throw division_by_zero();
    reduce();
  }

  const integer& numerator() const noexcept { return num_; }
  const integer& denominator() const noexcept { return den_; }
  int sign() const { return num_.sign(); }

  friend bool operator==(const rational&, const rational&) = default;

  friend int compare(const rational& a, const rational& b) {
    integer lhs = a.num_ * b.den_;
    integer rhs = b.num_ * a.den_;
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
  }

  std::string str() const { return num_.str() + "/" + den_.str(); }

 private:
  integer num_ = 0;
  integer den_ = 1;

  void reduce() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    integer g = gcd(integer(abs(num_)), den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }
};

inline rational rat_add(const rational& a, const rational& b) {
  return {a.numerator() * b.denominator() + b.numerator() * a.denominator(), a.denominator() * b.denominator()};
}

inline rational rat_sub(const rational& a, const rational& b) {
  return {a.numerator() * b.denominator() - b.numerator() * a.denominator(), a.denominator() * b.denominator()};
}

inline rational rat_mul(const rational& a, const rational& b) {
  return {a.numerator() * b.numerator(), a.denominator() * b.denominator()};
}

inline rational rat_div(const rational& a, const rational& b) {
  if (b.sign() == 0) throw division_by_zero();
  return {a.numerator() * b.denominator(), a.denominator() * b.numerator()};
}

/// The unique value with at most `precision` significant digits nearest q
/// under `mode`, decided by integer comparisons only.
template <class Decimal = decimal>
Decimal rat_round(const rational& q, std::uint64_t precision, rounding_mode mode) {
  if (precision < 1) throw std::invalid_argument("precision must be >= 1");
  if (q.sign() == 0) return Decimal{};
  const bool negative = q.sign() < 0;
  const integer num = abs(q.numerator());
  const integer& den = q.denominator();

  // Leading exponent e with 10^e <= |q| < 10^(e+1).
  std::int64_t e = static_cast<std::int64_t>(decimal_digits(num)) - static_cast<std::int64_t>(decimal_digits(den));
  auto at_least_pow10 = [&](std::int64_t k) {
    return k >= 0 ? num >= den * pow10(static_cast<std::uint64_t>(k))
                  : num * pow10(static_cast<std::uint64_t>(-k)) >= den;
  };
  if (!at_least_pow10(e)) --e;

  // |q| * 10^(precision - 1 - e) = kept + rem / divisor, kept has `precision` digits.
  const std::int64_t shift = static_cast<std::int64_t>(precision) - 1 - e;
  integer scaled_num = num;
  integer divisor = den;
  if (shift >= 0) scaled_num *= pow10(static_cast<std::uint64_t>(shift));
  else divisor *= pow10(static_cast<std::uint64_t>(-shift));
  integer kept = scaled_num / divisor;
  const integer rem = scaled_num % divisor;

  bool away = false;
  if (rem != 0) {
    const integer twice = 2 * rem;
    const int vs_half = twice < divisor ? -1 : (twice > divisor ? 1 : 0);
    switch (mode) {
      case rounding_mode::half_even: away = vs_half > 0 || (vs_half == 0 && (kept % 2) != 0); break;
      case rounding_mode::half_up: away = vs_half >= 0; break;
      case rounding_mode::toward_zero: away = false; break;
      case rounding_mode::up: away = !negative; break;
      case rounding_mode::down: away = negative; break;
    }
  }
  if (away) kept += 1;
  if (kept == pow10(precision)) {
    kept /= 10;
    ++e;
  }
  const std::string digits = kept.str();
  if (e < min_exponent || e > max_exponent) throw exponent_overflow();
  return Decimal::normalize(negative, digits, e);
}

template <class Decimal>
rational to_rational(const Decimal& x) {
  if (x.is_zero()) return {};
  integer coeff(x.digits());
  const std::int64_t lowest = std::int64_t{x.exponent()} - static_cast<std::int64_t>(x.digit_count()) + 1;
  if (x.is_negative()) coeff = -coeff;
  if (lowest >= 0) return {coeff * pow10(static_cast<std::uint64_t>(lowest))};
  return {coeff, pow10(static_cast<std::uint64_t>(-lowest))};
}

}  // namespace noz::oracle
