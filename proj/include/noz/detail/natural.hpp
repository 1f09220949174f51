#pragma once

// Unsigned big-integer kernel over decimal limbs. A natural is a vector of
// limbs in base 10^Digits, least significant limb first, with no zero limb at
// the top. Zero is the empty vector.

#include <algorithm>
#include <array>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace noz::detail {

using limb_t = std::uint32_t;
using wide_t = std::uint64_t;

inline constexpr std::array<limb_t, 10> pow10_table = {
    1u, 10u, 100u, 1000u, 10000u, 100000u, 1000000u, 10000000u, 100000000u, 1000000000u};

inline int count_digits(limb_t v) {
  int n = 1;
  while (n < 10 && v >= pow10_table[n]) ++n;
  return n;
}

template <int Digits>
struct natural_ops {
  static_assert(Digits >= 1 && Digits <= 9, "limb must hold 1..9 decimal digits");

  using natural = std::vector<limb_t>;
  static constexpr int digits_per_limb = Digits;
  static constexpr wide_t base = pow10_table[Digits];

  static void trim(natural& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }

  static std::uint64_t digit_count(const natural& a) {
    if (a.empty()) return 0;
    return static_cast<std::uint64_t>(a.size() - 1) * Digits + count_digits(a.back());
  }

  /// Decimal digit at position `i` (0 = units).
  static int digit_at(const natural& a, std::uint64_t i) {
    const std::size_t limb = static_cast<std::size_t>(i / Digits);
    if (limb >= a.size()) return 0;
    return static_cast<int>((a[limb] / pow10_table[i % Digits]) % 10);
  }

  /// True if any digit strictly below position `i` is nonzero.
  static bool any_below(const natural& a, std::uint64_t i) {
    const std::size_t limb = static_cast<std::size_t>(i / Digits);
    const std::size_t scan = std::min(limb, a.size());
    for (std::size_t k = 0; k < scan; ++k)
      if (a[k] != 0) return true;
    if (limb < a.size() && a[limb] % pow10_table[i % Digits] != 0) return true;
    return false;
  }

  static std::uint64_t trailing_zeros(const natural& a) {
    if (a.empty()) return 0;
    std::uint64_t n = 0;
    std::size_t k = 0;
    while (a[k] == 0) {
      n += Digits;
      ++k;
    }
    limb_t v = a[k];
    while (v % 10 == 0) {
      v /= 10;
      ++n;
    }
    return n;
  }

  /// Parses an all-digit string; leading zeros are allowed.
  static natural from_digits(std::string_view text) {
    natural out;
    out.reserve(text.size() / Digits + 1);
    std::size_t end = text.size();
    while (end > 0) {
      const std::size_t begin = end >= static_cast<std::size_t>(Digits) ? end - Digits : 0;
      limb_t v = 0;
      for (std::size_t i = begin; i < end; ++i) v = v * 10 + static_cast<limb_t>(text[i] - '0');
      out.push_back(v);
      end = begin;
    }
    trim(out);
    return out;
  }

  static std::string to_digits(const natural& a) {
    if (a.empty()) return "0";
    std::string out = std::to_string(a.back());
    for (std::size_t k = a.size() - 1; k-- > 0;) {
      std::string limb = std::to_string(a[k]);
      out.append(static_cast<std::size_t>(Digits) - limb.size(), '0');
      out += limb;
    }
    return out;
  }

  static natural from_uint(std::uint64_t v) {
    natural out;
    while (v != 0) {
      out.push_back(static_cast<limb_t>(v % base));
      v /= base;
    }
    return out;
  }

  static int compare(const natural& a, const natural& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t k = a.size(); k-- > 0;) {
      if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
    }
    return 0;
  }

  static natural add(const natural& a, const natural& b) {
    const natural& big = a.size() >= b.size() ? a : b;
    const natural& small = a.size() >= b.size() ? b : a;
    natural out;
    out.reserve(big.size() + 1);
    wide_t carry = 0;
    for (std::size_t k = 0; k < big.size(); ++k) {
      wide_t s = static_cast<wide_t>(big[k]) + carry + (k < small.size() ? small[k] : 0);
      carry = s >= base ? 1 : 0;
      out.push_back(static_cast<limb_t>(carry ? s - base : s));
    }
    if (carry) out.push_back(1);
    return out;
  }

  /// a - b; requires a >= b.
  static natural sub(const natural& a, const natural& b) {
    assert(compare(a, b) >= 0);
    natural out(a.size());
    std::int64_t borrow = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
      std::int64_t d = static_cast<std::int64_t>(a[k]) - borrow -
                       static_cast<std::int64_t>(k < b.size() ? b[k] : 0);
      borrow = d < 0 ? 1 : 0;
      out[k] = static_cast<limb_t>(d < 0 ? d + static_cast<std::int64_t>(base) : d);
    }
    trim(out);
    return out;
  }

  static natural add_small(const natural& a, limb_t v) { return add(a, from_uint(v)); }

  /// a * m for any 32-bit multiplier.
  static natural mul_small(const natural& a, std::uint32_t m) {
    if (a.empty() || m == 0) return {};
    natural out;
    out.reserve(a.size() + 2);
    wide_t carry = 0;
    for (limb_t limb : a) {
      wide_t cur = static_cast<wide_t>(limb) * m + carry;
      out.push_back(static_cast<limb_t>(cur % base));
      carry = cur / base;
    }
    while (carry != 0) {
      out.push_back(static_cast<limb_t>(carry % base));
      carry /= base;
    }
    return out;
  }

  /// Schoolbook product.
  static natural mul(const natural& a, const natural& b) {
    if (a.empty() || b.empty()) return {};
    natural out(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      const wide_t ai = a[i];
      if (ai == 0) continue;
      wide_t carry = 0;
      for (std::size_t j = 0; j < b.size(); ++j) {
        wide_t cur = out[i + j] + ai * b[j] + carry;
        out[i + j] = static_cast<limb_t>(cur % base);
        carry = cur / base;
      }
      std::size_t k = i + b.size();
      while (carry != 0) {
        wide_t cur = out[k] + carry;
        out[k] = static_cast<limb_t>(cur % base);
        carry = cur / base;
        ++k;
      }
    }
    trim(out);
    return out;
  }

  /// a * 10^k.
  static natural shift_left(const natural& a, std::uint64_t k) {
    if (a.empty() || k == 0) return a;
    const std::size_t limbs = static_cast<std::size_t>(k / Digits);
    natural out = mul_small(a, pow10_table[k % Digits]);
    out.insert(out.begin(), limbs, 0);
    return out;
  }

  /// floor(a / 10^k).
  static natural shift_right(const natural& a, std::uint64_t k) {
    const std::uint64_t limbs = k / Digits;
    if (limbs >= a.size()) return {};
    natural out(a.begin() + static_cast<std::ptrdiff_t>(limbs), a.end());
    const limb_t div = pow10_table[k % Digits];
    if (div != 1) {
      const limb_t mul = static_cast<limb_t>(base / div);
      for (std::size_t i = 0; i < out.size(); ++i) {
        limb_t v = out[i] / div;
        if (i + 1 < out.size()) v += (out[i + 1] % div) * mul;
        out[i] = v;
      }
      trim(out);
    }
    return out;
  }

  struct small_divmod {
    natural quotient;
    limb_t remainder;
  };

  static small_divmod div_small(const natural& a, limb_t d) {
    assert(d != 0);
    natural q(a.size());
    wide_t rem = 0;
    for (std::size_t k = a.size(); k-- > 0;) {
      wide_t cur = rem * base + a[k];
      q[k] = static_cast<limb_t>(cur / d);
      rem = cur % d;
    }
    trim(q);
    return {std::move(q), static_cast<limb_t>(rem)};
  }

  struct divmod_result {
    natural quotient;
    natural remainder;
  };

  /// Long division (Knuth, TAOCP vol. 2, 4.3.1 algorithm D) in base 10^Digits.
  static divmod_result divmod(const natural& u, const natural& v) {
    assert(!v.empty());
    if (compare(u, v) < 0) return {{}, u};
    if (v.size() == 1) {
      auto [q, r] = div_small(u, v[0]);
      return {std::move(q), from_uint(r)};
    }

    const std::size_t n = v.size();
    const std::size_t m = u.size() - n;
    const limb_t scale = static_cast<limb_t>(base / (static_cast<wide_t>(v.back()) + 1));
    natural un = mul_small(u, scale);
    natural vn = mul_small(v, scale);
    un.resize(u.size() + 1, 0);
    assert(vn.size() == n);

    natural q(m + 1, 0);
    for (std::size_t j = m + 1; j-- > 0;) {
      const wide_t num = static_cast<wide_t>(un[j + n]) * base + un[j + n - 1];
      wide_t qhat = num / vn[n - 1];
      wide_t rhat = num % vn[n - 1];
      while (qhat >= base || qhat * vn[n - 2] > rhat * base + un[j + n - 2]) {
        --qhat;
        rhat += vn[n - 1];
        if (rhat >= base) break;
      }

      std::int64_t borrow = 0;
      wide_t carry = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const wide_t p = qhat * vn[i] + carry;
        carry = p / base;
        std::int64_t d = static_cast<std::int64_t>(un[i + j]) -
                         static_cast<std::int64_t>(p % base) - borrow;
        borrow = d < 0 ? 1 : 0;
        un[i + j] = static_cast<limb_t>(d < 0 ? d + static_cast<std::int64_t>(base) : d);
      }
      std::int64_t top = static_cast<std::int64_t>(un[j + n]) - static_cast<std::int64_t>(carry) - borrow;
      if (top < 0) {
        // qhat was one too large; add the divisor back.
        --qhat;
        wide_t c = 0;
        for (std::size_t i = 0; i < n; ++i) {
          wide_t s = static_cast<wide_t>(un[i + j]) + vn[i] + c;
          c = s >= base ? 1 : 0;
          un[i + j] = static_cast<limb_t>(c ? s - base : s);
        }
        top += static_cast<std::int64_t>(c);
      }
      assert(top == 0);
      un[j + n] = 0;
      q[j] = static_cast<limb_t>(qhat);
    }

    un.resize(n);
    trim(un);
    trim(q);
    auto [r, rest] = div_small(un, scale);
    assert(rest == 0);
    return {std::move(q), std::move(r)};
  }
};

}  // namespace noz::detail
