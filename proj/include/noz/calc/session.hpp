#pragma once

// Line-oriented REPL and the cancellation demonstration.

#include <charconv>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "noz/calc/evaluate.hpp"
#include "noz/context.hpp"
#include "noz/functions.hpp"

namespace noz::calc {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace detail

/// Session state: the precision context is the only thing directives change.
class session {
 public:
  explicit session(context ctx = context(100), series_policy policy = series_policy::standard())
      : ctx_(ctx), policy_(policy) {}

  const context& ctx() const noexcept { return ctx_; }

  /// Handles one input line. Returns false when the session should end.
  bool handle(std::string_view raw, std::ostream& out, std::ostream& err) {
    const std::string_view line = detail::trim(raw);
    if (line.empty()) return true;
    if (line.front() == ':') return directive(line.substr(1), err);
    try {
      eval_outcome result = evaluate(line, ctx_, policy_);
      for (const auto& note : result.diagnostics) err << "note: " << note << '\n';
      out << result.rendered << '\n';
    } catch (const noz::error& e) {
      err << "error: " << e.what() << '\n';
    }
    return true;
  }

 private:
  context ctx_;
  series_policy policy_;

  bool directive(std::string_view body, std::ostream& err) {
    const auto space = body.find_first_of(" \t");
    const std::string_view name = body.substr(0, space);
    const std::string_view arg = space == std::string_view::npos ? std::string_view{} : detail::trim(body.substr(space));
    if (name == "quit") return false;
    if (name == "prec") {
      std::uint64_t value = 0;
      auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), value);
      if (arg.empty() || ec != std::errc{} || ptr != arg.data() + arg.size()) {
        err << "error: :prec expects a non-negative integer\n";
      } else if (value < min_precision) {
        err << "error: precision must be >= 1\n";
      } else if (value > max_precision) {
        err << "error: precision must be <= 2000000000\n";
      } else {
        ctx_ = ctx_.with_precision(value);
      }
      return true;
    }
    if (name == "mode") {
      if (auto mode = rounding_mode_from_string(arg)) {
        ctx_ = ctx_.with_rounding(*mode);
      } else {
        err << "error: unknown rounding mode '" << arg << "' (half-even, half-up, toward-zero, up, down)\n";
      }
      return true;
    }
    err << "error: unknown directive ':" << name << "'\n";
    return true;
  }
};

/// Reads lines until end of input or ":quit". Nonzero only if a stream failed.
inline int repl_session(std::istream& in, std::ostream& out, std::ostream& err, session s = session()) {
  std::string line;
  while (std::getline(in, line)) {
    const bool more = s.handle(line, out, err);
    out.flush();
    if (!out) return 1;
    if (!more) break;
  }
  if (in.bad() || !out) return 1;
  return 0;
}

inline constexpr std::string_view cancellation_expression = "(1 + 1E-8) - 1";

/// Evaluates a cancellation-prone expression at 4 and 50 digits.
inline int demo_cancellation(std::ostream& out) {
  const eval_outcome low = evaluate(cancellation_expression, context(4));
  const eval_outcome high = evaluate(cancellation_expression, context(50));
  out << "Catastrophic cancellation: " << cancellation_expression << '\n'
      << "  precision 4:  " << low.rendered << '\n'
      << "    1 + 1E-8 rounds to 1.000 at 4 digits, so subtracting 1 leaves nothing.\n"
      << "  precision 50: " << high.rendered << '\n'
      << "    50 digits hold 1.00000001 exactly, so the small term survives.\n";
  out.flush();
  return out ? 0 : 1;
}

}  // namespace noz::calc
