#pragma once

// Arbitrary-precision decimal floating point.
//
// A nonzero value is (-1)^sign * d1.d2...dp * 10^exponent. The significand
// digits live in a vector of limbs, each holding LimbDigits decimal digits,
// least significant limb first. Values are always canonical: no leading or
// trailing zero digits, and a single unsigned zero with exponent 0. Because
// of that, structural equality is numeric equality.
//
// Every inexact operation takes a noz::context and rounds exactly once.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <new>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "noz/context.hpp"
#include "noz/detail/natural.hpp"
#include "noz/error.hpp"

namespace noz {

inline constexpr std::int64_t min_exponent = std::numeric_limits<std::int32_t>::min();
inline constexpr std::int64_t max_exponent = std::numeric_limits<std::int32_t>::max();

template <int LimbDigits>
class basic_decimal;

namespace detail {

// What the discarded low part of a significand looked like relative to half
// a unit of the last kept digit.
enum class discarded { zero, below_half, half, above_half };

inline discarded classify(int first_digit, bool rest_nonzero) {
  if (first_digit == 0 && !rest_nonzero) return discarded::zero;
  if (first_digit < 5) return discarded::below_half;
  if (first_digit == 5 && !rest_nonzero) return discarded::half;
  if (first_digit == 5) return discarded::above_half;
  return discarded::above_half;
}

inline bool round_away(rounding_mode mode, bool negative, discarded lost, bool last_digit_odd) {
  if (lost == discarded::zero) return false;
  switch (mode) {
    case rounding_mode::half_even:
      return lost == discarded::above_half || (lost == discarded::half && last_digit_odd);
    case rounding_mode::half_up:
      return lost == discarded::half || lost == discarded::above_half;
    case rounding_mode::toward_zero:
      return false;
    case rounding_mode::up:
      return !negative;
    case rounding_mode::down:
      return negative;
  }
  return false;
}

template <class F>
auto guard_allocation(F&& f) {
  try {
    return f();
  } catch (const std::bad_alloc&) {
    throw resource_error("out of memory for requested precision");
  } catch (const std::length_error&) {
    throw resource_error("requested precision exceeds addressable size");
  }
}

}  // namespace detail

template <int LimbDigits>
class basic_decimal {
  using ops = detail::natural_ops<LimbDigits>;
  using natural = typename ops::natural;

 public:
  static constexpr int limb_digits = LimbDigits;

  /// Canonical zero.
  basic_decimal() = default;

  /// Builds the canonical value of a raw digit sequence. `exponent` is the
  /// power of ten of the first character of `digits`; leading and trailing
  /// zeros are allowed.
  static basic_decimal normalize(bool negative, std::string_view digits, std::int64_t exponent) {
    if (digits.empty()) throw std::invalid_argument("empty digit sequence");
    for (char c : digits)
      if (c < '0' || c > '9') throw std::invalid_argument("non-digit in digit sequence");
    const auto lowest = exponent - static_cast<std::int64_t>(digits.size() - 1);
    return finish(negative, ops::from_digits(digits), lowest);
  }

  static basic_decimal from_integer(std::int64_t v) {
    const bool negative = v < 0;
    const std::uint64_t mag = negative ? 0 - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
    return finish(negative, ops::from_uint(mag), 0);
  }

  bool is_zero() const noexcept { return coeff_.empty(); }
  bool is_negative() const noexcept { return negative_; }

  /// Power of ten of the leading digit (0 for zero).
  std::int32_t exponent() const noexcept { return exponent_; }

  /// Number of significand digits p (0 for zero).
  std::uint64_t digit_count() const noexcept { return ops::digit_count(coeff_); }

  /// Significand digits d1...dp, most significant first ("" for zero).
  std::string digits() const { return is_zero() ? std::string() : ops::to_digits(coeff_); }

  std::span<const detail::limb_t> limbs() const noexcept { return coeff_; }

  /// The value if it is an integer representable as int64.
  std::optional<std::int64_t> to_int64() const {
    if (is_zero()) return 0;
    const std::int64_t lowest = lowest_exponent();
    if (lowest < 0 || exponent_ > 18) return std::nullopt;
    std::uint64_t mag = 0;
    for (char c : digits()) mag = mag * 10 + static_cast<std::uint64_t>(c - '0');
    for (std::int64_t k = 0; k < lowest; ++k) {
      if (mag > std::numeric_limits<std::uint64_t>::max() / 10) return std::nullopt;
      mag *= 10;
    }
    if (negative_) {
      if (mag > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()) + 1)
        return std::nullopt;
      return static_cast<std::int64_t>(0 - mag);
    }
    if (mag > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) return std::nullopt;
    return static_cast<std::int64_t>(mag);
  }

  /// Nearest double, for magnitude estimates only.
  double approx_double() const {
    if (is_zero()) return 0.0;
    std::string d = digits().substr(0, 20);
    std::string text = (negative_ ? "-0." : "0.") + d + "e" + std::to_string(std::int64_t{exponent_} + 1);
    return std::strtod(text.c_str(), nullptr);
  }

  friend bool operator==(const basic_decimal&, const basic_decimal&) = default;

  friend std::strong_ordering operator<=>(const basic_decimal& a, const basic_decimal& b) {
    return compare(a, b);
  }

  // Arithmetic. Each result equals the exact result rounded once under ctx.

  friend basic_decimal round(const basic_decimal& x, const context& ctx) {
    return finish(x.negative_, x.coeff_, x.lowest_exponent(), &ctx);
  }

  friend basic_decimal add(const basic_decimal& a, const basic_decimal& b, const context& ctx) {
    return detail::guard_allocation([&] { return add_impl(a, b, ctx); });
  }

  friend basic_decimal sub(const basic_decimal& a, const basic_decimal& b, const context& ctx) {
    return add(a, negate(b), ctx);
  }

  friend basic_decimal mul(const basic_decimal& a, const basic_decimal& b, const context& ctx) {
    if (a.is_zero() || b.is_zero()) return {};
    return detail::guard_allocation([&] {
      return finish(a.negative_ != b.negative_, ops::mul(a.coeff_, b.coeff_),
                    a.lowest_exponent() + b.lowest_exponent(), &ctx);
    });
  }

  /// Long division to precision + 2 digits with a sticky remainder flag, then
  /// one rounding.
  friend basic_decimal div(const basic_decimal& a, const basic_decimal& b, const context& ctx) {
    if (b.is_zero()) throw division_by_zero();
    if (a.is_zero()) return {};
    return detail::guard_allocation([&] {
      constexpr std::int64_t guard = 2;
      const auto da = static_cast<std::int64_t>(a.digit_count());
      const auto db = static_cast<std::int64_t>(b.digit_count());
      const std::int64_t shift =
          std::max<std::int64_t>(0, static_cast<std::int64_t>(ctx.precision()) + guard + db - da);
      auto [q, r] = ops::divmod(ops::shift_left(a.coeff_, static_cast<std::uint64_t>(shift)), b.coeff_);
      return finish(a.negative_ != b.negative_, std::move(q),
                    a.lowest_exponent() - shift - b.lowest_exponent(), &ctx, !r.empty());
    });
  }

  friend std::strong_ordering compare(const basic_decimal& a, const basic_decimal& b) {
    const int sa = a.signum();
    const int sb = b.signum();
    if (sa != sb) return sa <=> sb;
    if (sa == 0) return std::strong_ordering::equal;
    std::strong_ordering mag = compare_magnitude(a, b);
    return sa > 0 ? mag : 0 <=> mag;
  }

  friend basic_decimal negate(const basic_decimal& a) {
    basic_decimal out = a;
    if (!out.is_zero()) out.negative_ = !out.negative_;
    return out;
  }

  friend basic_decimal abs(const basic_decimal& a) {
    basic_decimal out = a;
    out.negative_ = false;
    return out;
  }

  /// Parses `[+-]digits[.digits][(E|e)[+-]digits]`; at least one significand
  /// digit is required. Values longer than ctx.precision are rounded.
  static basic_decimal parse(std::string_view text, const context& ctx) {
    parsed p = scan(text);
    return finish(p.negative, ops::from_digits(p.digits), p.lowest, &ctx);
  }

  /// Like parse, but never rounds.
  static basic_decimal parse_exact(std::string_view text) {
    parsed p = scan(text);
    return finish(p.negative, ops::from_digits(p.digits), p.lowest);
  }

  /// Canonical text: "[-]d1.d2...dpEk", or "0E0".
  friend std::string format(const basic_decimal& x) {
    if (x.is_zero()) return "0E0";
    std::string d = x.digits();
    std::string out;
    out.reserve(d.size() + 16);
    if (x.negative_) out += '-';
    out += d[0];
    if (d.size() > 1) {
      out += '.';
      out.append(d, 1);
    }
    out += 'E';
    out += std::to_string(x.exponent_);
    return out;
  }

 private:
  bool negative_ = false;
  natural coeff_;
  std::int32_t exponent_ = 0;

  int signum() const noexcept { return is_zero() ? 0 : (negative_ ? -1 : 1); }

  // Power of ten of the last significand digit.
  std::int64_t lowest_exponent() const noexcept {
    return is_zero() ? 0 : std::int64_t{exponent_} - static_cast<std::int64_t>(digit_count()) + 1;
  }

  // Canonicalizes sign * coeff * 10^lowest, rounding to ctx when given.
  // `sticky` marks nonzero digits below coeff's last digit; it is only
  // meaningful when coeff carries more digits than the precision.
  static basic_decimal finish(bool negative, natural coeff, std::int64_t lowest,
                              const context* ctx = nullptr, bool sticky = false) {
    if (coeff.empty()) return {};
    std::uint64_t count = ops::digit_count(coeff);
    if (ctx != nullptr && count > ctx->precision()) {
      const std::uint64_t drop = count - ctx->precision();
      const auto lost = detail::classify(ops::digit_at(coeff, drop - 1),
                                         sticky || ops::any_below(coeff, drop - 1));
      natural kept = ops::shift_right(coeff, drop);
      const bool odd = (kept.front() % 2) != 0;
      if (detail::round_away(ctx->rounding(), negative, lost, odd)) kept = ops::add_small(kept, 1);
      coeff = std::move(kept);
      lowest += static_cast<std::int64_t>(drop);
    }
    const std::uint64_t zeros = ops::trailing_zeros(coeff);
    if (zeros != 0) {
      coeff = ops::shift_right(coeff, zeros);
      lowest += static_cast<std::int64_t>(zeros);
    }
    count = ops::digit_count(coeff);
    const std::int64_t leading = lowest + static_cast<std::int64_t>(count) - 1;
    if (leading < min_exponent || leading > max_exponent) throw exponent_overflow();
    basic_decimal out;
    out.negative_ = negative;
    out.coeff_ = std::move(coeff);
    out.exponent_ = static_cast<std::int32_t>(leading);
    return out;
  }

  static std::strong_ordering compare_magnitude(const basic_decimal& a, const basic_decimal& b) {
    if (a.exponent_ != b.exponent_) return a.exponent_ <=> b.exponent_;
    const std::uint64_t pa = a.digit_count();
    const std::uint64_t pb = b.digit_count();
    int c = pa >= pb ? ops::compare(a.coeff_, ops::shift_left(b.coeff_, pa - pb))
                     : ops::compare(ops::shift_left(a.coeff_, pb - pa), b.coeff_);
    return c <=> 0;
  }

  static basic_decimal add_impl(basic_decimal a, basic_decimal b, const context& ctx) {
    if (a.is_zero()) return round(b, ctx);
    if (b.is_zero()) return round(a, ctx);
    if (compare_magnitude(a, b) < 0) std::swap(a, b);

    std::int64_t low_a = a.lowest_exponent();
    std::int64_t low_b = b.lowest_exponent();
    natural cb = b.coeff_;

    // An operand lying entirely below both the last digit of `a` and the
    // rounding position can be replaced by a single unit two places further
    // down: no rounding boundary separates the two sums.
    const std::int64_t floor = std::min(low_a, std::int64_t{a.exponent_} - static_cast<std::int64_t>(ctx.precision())) - 2;
    if (std::int64_t{b.exponent_} < floor) {
      cb = ops::from_uint(1);
      low_b = floor;
    }

    const std::int64_t low = std::min(low_a, low_b);
    natural xa = ops::shift_left(a.coeff_, static_cast<std::uint64_t>(low_a - low));
    natural xb = ops::shift_left(cb, static_cast<std::uint64_t>(low_b - low));
    if (a.negative_ == b.negative_) return finish(a.negative_, ops::add(xa, xb), low, &ctx);
    const int c = ops::compare(xa, xb);
    if (c == 0) return {};
    if (c > 0) return finish(a.negative_, ops::sub(xa, xb), low, &ctx);
    return finish(b.negative_, ops::sub(xb, xa), low, &ctx);
  }

  struct parsed {
    bool negative = false;
    std::string digits;
    std::int64_t lowest = 0;
  };

  static parsed scan(std::string_view text) {
    parsed out;
    std::size_t i = 0;
    if (text.empty()) throw parse_error("empty number", 0);
    if (text[i] == '+' || text[i] == '-') {
      out.negative = text[i] == '-';
      ++i;
    }
    bool seen_point = false;
    bool seen_digit = false;
    std::int64_t fraction_digits = 0;
    for (; i < text.size(); ++i) {
      const char c = text[i];
      if (c >= '0' && c <= '9') {
        seen_digit = true;
        if (!(out.digits.empty() && c == '0')) out.digits += c;
        if (seen_point) ++fraction_digits;
      } else if (c == '.') {
        if (seen_point) throw parse_error("multiple decimal points", i);
        seen_point = true;
      } else {
        break;
      }
    }
    if (!seen_digit) throw parse_error("expected digit", i);

    std::int64_t exponent = 0;
    if (i < text.size()) {
      if (text[i] != 'E' && text[i] != 'e') throw parse_error("unexpected character", i);
      ++i;
      bool exp_negative = false;
      if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        exp_negative = text[i] == '-';
        ++i;
      }
      if (i >= text.size()) throw parse_error("expected exponent digits", i);
      // Saturate far beyond the representable range; finish() reports overflow.
      constexpr std::int64_t cap = std::int64_t{1} << 50;
      for (; i < text.size(); ++i) {
        const char c = text[i];
        if (c < '0' || c > '9') throw parse_error("expected exponent digits", i);
        exponent = std::min(cap, exponent * 10 + (c - '0'));
      }
      if (exp_negative) exponent = -exponent;
    }

    if (out.digits.empty()) {
      out.digits = "0";
      out.negative = false;
      return out;
    }
    out.lowest = exponent - fraction_digits;
    return out;
  }
};

/// The default type: nine decimal digits per 32-bit limb.
using decimal = basic_decimal<9>;

}  // namespace noz
