#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace noz {

// Up and Down are the directed modes (toward +inf and toward -inf).
enum class rounding_mode { half_even, half_up, toward_zero, up, down };

inline constexpr std::uint64_t min_precision = 1;
inline constexpr std::uint64_t max_precision = 2'000'000'000;

inline std::string_view to_string(rounding_mode mode) {
  switch (mode) {
    case rounding_mode::half_even: return "half-even";
    case rounding_mode::half_up: return "half-up";
    case rounding_mode::toward_zero: return "toward-zero";
    case rounding_mode::up: return "up";
    case rounding_mode::down: return "down";
  }
  return "half-even";
}

inline std::optional<rounding_mode> rounding_mode_from_string(std::string_view name) {
  for (auto mode : {rounding_mode::half_even, rounding_mode::half_up, rounding_mode::toward_zero,
                    rounding_mode::up, rounding_mode::down}) {
    if (to_string(mode) == name) return mode;
  }
  return std::nullopt;
}

/// Precision (significant decimal digits) and rounding mode applied by every
/// inexact operation. Immutable once built.
class context {
 public:
  explicit context(std::uint64_t precision, rounding_mode rounding = rounding_mode::half_even)
      : precision_(precision), rounding_(rounding) {
    if (precision < min_precision) throw std::invalid_argument("precision must be >= 1");
    if (precision > max_precision)
      throw std::invalid_argument("precision must be <= 2000000000");
  }

  std::uint64_t precision() const noexcept { return precision_; }
  rounding_mode rounding() const noexcept { return rounding_; }

  context with_precision(std::uint64_t precision) const { return context(precision, rounding_); }
  context with_rounding(rounding_mode rounding) const { return context(precision_, rounding); }

  friend bool operator==(const context&, const context&) = default;

 private:
  std::uint64_t precision_;
  rounding_mode rounding_;
};

}  // namespace noz
