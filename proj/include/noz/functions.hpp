#pragma once

// Factorial and Maclaurin-series elementary functions.
//
// Series are summed at a working precision of P + G digits (plus extra
// digits when terms grow larger than the result) with round-half-even, and
// the sum is rounded once to the caller's context at the end.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "noz/context.hpp"
#include "noz/decimal.hpp"
#include "noz/error.hpp"

namespace noz {

struct series_policy {
  std::uint64_t guard_digits = 10;
  std::uint64_t max_terms = 10'000;
  /// When set, exactly this many terms are summed and no stopping rule applies.
  std::optional<std::uint64_t> fixed_terms;

  /// Guard digits max(10, ceil(log10(max_terms))).
  static series_policy standard(std::uint64_t max_terms = 10'000) {
    series_policy p;
    p.max_terms = max_terms;
    p.guard_digits = std::max<std::uint64_t>(
        10, static_cast<std::uint64_t>(std::ceil(std::log10(static_cast<double>(std::max<std::uint64_t>(max_terms, 1))))));
    return p;
  }

  static series_policy fixed(std::uint64_t terms) {
    series_policy p = standard(std::max<std::uint64_t>(terms, 10'000));
    p.fixed_terms = terms;
    return p;
  }

  void validate() const {
    if (guard_digits < 2) throw std::invalid_argument("guard digits must be >= 2");
    if (max_terms < 1) throw std::invalid_argument("max terms must be >= 1");
    if (fixed_terms && (*fixed_terms < 1 || *fixed_terms > max_terms))
      throw std::invalid_argument("fixed terms must be in [1, max terms]");
  }
};

/// Optional trace of one series evaluation.
struct series_report {
  std::uint64_t terms = 0;
  std::uint64_t working_precision = 0;
  /// Leading exponent of every summed nonzero term, in order.
  std::vector<std::int64_t> term_exponents;
};

/// Default cap on the exact factorial size, in decimal digits.
inline constexpr std::uint64_t factorial_digit_limit = 100'000;

/// n! computed exactly, then rounded to ctx if it has more than
/// ctx.precision() digits.
template <int LimbDigits>
basic_decimal<LimbDigits> factorial(std::uint64_t n, const context& ctx,
                                    std::uint64_t digit_limit = factorial_digit_limit) {
  using ops = detail::natural_ops<LimbDigits>;
  const double estimated = std::lgamma(static_cast<double>(n) + 1.0) / std::log(10.0);
  if (estimated > static_cast<double>(digit_limit))
    throw resource_error(std::to_string(n) + "! exceeds " + std::to_string(digit_limit) + " digits");
  if (n > std::numeric_limits<std::uint32_t>::max()) throw resource_error("factorial argument too large");

  return detail::guard_allocation([&] {
    typename ops::natural product = ops::from_uint(1);
    for (std::uint64_t k = 2; k <= n; ++k) product = ops::mul_small(product, static_cast<std::uint32_t>(k));
    std::string digits = ops::to_digits(product);
    auto exact = basic_decimal<LimbDigits>::normalize(false, digits, static_cast<std::int64_t>(digits.size()) - 1);
    return round(exact, ctx);
  });
}

namespace detail {

inline constexpr double log10_e = 0.43429448190325182765;

template <int LimbDigits>
struct series_sum {
  basic_decimal<LimbDigits> value;
  std::int64_t largest_term = 0;
};

// Sums first + t1 + t2 + ..., where t_{k+1} = t_k * step(k). `step` returns
// the multiplier/divisor pair for term k.
template <int LimbDigits, class Step>
series_sum<LimbDigits> sum_series(const basic_decimal<LimbDigits>& first, const Step& step,
                                  std::uint64_t precision, const series_policy& policy,
                                  std::uint64_t working, series_report* report) {
  using dec = basic_decimal<LimbDigits>;
  const context wctx(working);
  dec term = round(first, wctx);
  dec sum;
  std::int64_t largest = term.exponent();
  std::uint64_t count = 0;
  if (report) {
    report->term_exponents.clear();
    report->working_precision = working;
  }

  const std::uint64_t limit = policy.fixed_terms.value_or(policy.max_terms);
  bool converged = false;
  while (count < limit) {
    sum = add(sum, term, wctx);
    ++count;
    if (report && !term.is_zero()) report->term_exponents.push_back(term.exponent());
    if (!term.is_zero()) largest = std::max<std::int64_t>(largest, term.exponent());
    if (!policy.fixed_terms) {
      const std::int64_t threshold = std::int64_t{sum.exponent()} -
                                     static_cast<std::int64_t>(precision + policy.guard_digits);
      if (term.is_zero() || (!sum.is_zero() && term.exponent() < threshold)) {
        converged = true;
        break;
      }
    }
    auto [numer, denom] = step(count - 1);
    term = div(mul(term, numer, wctx), denom, wctx);
  }
  if (report) report->terms = count;
  if (!policy.fixed_terms && !converged)
    throw max_terms_exceeded("series did not converge within " + std::to_string(policy.max_terms) + " terms");
  return {std::move(sum), largest};
}

// Runs the series at increasing working precision until the digits lost to
// cancellation (largest term vs. result) are covered.
template <int LimbDigits, class Step>
basic_decimal<LimbDigits> evaluate_series(const basic_decimal<LimbDigits>& first, const Step& step,
                                          std::uint64_t initial_extra, const context& ctx,
                                          const series_policy& policy, series_report* report) {
  policy.validate();
  const std::uint64_t base = ctx.precision() + policy.guard_digits;
  std::uint64_t extra = initial_extra;
  for (int attempt = 0;; ++attempt) {
    auto [sum, largest] = sum_series(first, step, ctx.precision(), policy, base + extra, report);
    if (sum.is_zero()) return sum;
    const std::int64_t lost = largest - std::int64_t{sum.exponent()};
    if (lost <= static_cast<std::int64_t>(extra) || attempt >= 3) return round(sum, ctx);
    extra = static_cast<std::uint64_t>(lost) + 1;
  }
}

template <int LimbDigits>
std::uint64_t growth_digits(const basic_decimal<LimbDigits>& x) {
  return static_cast<std::uint64_t>(std::ceil(std::abs(x.approx_double()) * log10_e)) + 1;
}

template <int LimbDigits>
void check_domain(const basic_decimal<LimbDigits>& x, std::int64_t bound, const char* name) {
  if (compare(abs(x), basic_decimal<LimbDigits>::from_integer(bound)) > 0)
    throw domain_error(std::string(name) + " argument outside [-" + std::to_string(bound) + ", " +
                       std::to_string(bound) + "]");
}

}  // namespace detail

/// e^x for |x| <= 100 by the Maclaurin series, t_{k+1} = t_k * x / (k+1).
template <int LimbDigits>
basic_decimal<LimbDigits> exp(const basic_decimal<LimbDigits>& x, const context& ctx,
                              const series_policy& policy = series_policy::standard(),
                              series_report* report = nullptr) {
  using dec = basic_decimal<LimbDigits>;
  detail::check_domain(x, 100, "exp");
  auto step = [&](std::uint64_t k) {
    return std::pair{x, dec::from_integer(static_cast<std::int64_t>(k + 1))};
  };
  const std::uint64_t extra = x.is_negative() ? detail::growth_digits(x) : 0;
  return detail::evaluate_series(dec::from_integer(1), step, extra, ctx, policy, report);
}

/// sin(x) for |x| <= 10; t_{k+1} = -t_k * x^2 / ((2k+2)(2k+3)).
template <int LimbDigits>
basic_decimal<LimbDigits> sin(const basic_decimal<LimbDigits>& x, const context& ctx,
                              const series_policy& policy = series_policy::standard(),
                              series_report* report = nullptr) {
  using dec = basic_decimal<LimbDigits>;
  detail::check_domain(x, 10, "sin");
  if (x.is_zero()) return {};
  const dec minus_square =
      negate(mul(x, x, context(2 * x.digit_count())));
  auto step = [&](std::uint64_t k) {
    return std::pair{minus_square, dec::from_integer(static_cast<std::int64_t>((2 * k + 2) * (2 * k + 3)))};
  };
  return detail::evaluate_series(x, step, detail::growth_digits(x), ctx, policy, report);
}

/// cos(x) for |x| <= 10; t_{k+1} = -t_k * x^2 / ((2k+1)(2k+2)).
template <int LimbDigits>
basic_decimal<LimbDigits> cos(const basic_decimal<LimbDigits>& x, const context& ctx,
                              const series_policy& policy = series_policy::standard(),
                              series_report* report = nullptr) {
  using dec = basic_decimal<LimbDigits>;
  detail::check_domain(x, 10, "cos");
  if (x.is_zero()) return round(dec::from_integer(1), ctx);
  const dec minus_square =
      negate(mul(x, x, context(2 * x.digit_count())));
  auto step = [&](std::uint64_t k) {
    return std::pair{minus_square, dec::from_integer(static_cast<std::int64_t>((2 * k + 1) * (2 * k + 2)))};
  };
  return detail::evaluate_series(dec::from_integer(1), step, detail::growth_digits(x), ctx, policy, report);
}

}  // namespace noz
