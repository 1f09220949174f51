#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "noz/calc/expr.hpp"
#include "noz/context.hpp"
#include "noz/decimal.hpp"
#include "noz/error.hpp"
#include "noz/functions.hpp"

namespace noz::calc {

/// A failure while evaluating a parsed tree, tagged with the offending node.
class evaluation_error : public noz::error {
 public:
  evaluation_error(const std::string& what, std::size_t offset)
      : noz::error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

struct eval_outcome {
  decimal value;
  std::string rendered;
  std::uint64_t precision_used = 0;
  std::vector<std::string> diagnostics;
};

namespace detail {

class evaluator {
 public:
  evaluator(const context& ctx, const series_policy& policy) : ctx_(ctx), policy_(policy) {}

  decimal eval(const expr& e) { return eval_node(e); }

  std::vector<std::string> take_diagnostics() { return std::move(diagnostics_); }

 private:
  const context& ctx_;
  const series_policy& policy_;
  std::vector<std::string> diagnostics_;
  bool noted_fixed_ = false;

  template <class F>
  decimal at(std::size_t offset, F&& f) {
    try {
      return f();
    } catch (const evaluation_error&) {
      throw;
    } catch (const noz::error& err) {
      throw evaluation_error(err.what(), offset);
    }
  }

  decimal eval_node(const expr& e) {
    switch (e.kind) {
      case node_kind::number:
        return at(e.offset, [&] {
          decimal exact = decimal::parse_exact(e.text);
          if (exact.digit_count() > ctx_.precision()) {
            diagnostics_.push_back("literal at offset " + std::to_string(e.offset) + " rounded to " +
                                   std::to_string(ctx_.precision()) + " digits");
            return round(exact, ctx_);
          }
          return exact;
        });
      case node_kind::negate: {
        decimal v = eval_node(e.operands[0]);
        return round(negate(v), ctx_);
      }
      case node_kind::binary: {
        decimal lhs = eval_node(e.operands[0]);
        decimal rhs = eval_node(e.operands[1]);
        return at(e.offset, [&] {
          switch (e.op) {
            case '+': return add(lhs, rhs, ctx_);
            case '-': return sub(lhs, rhs, ctx_);
            case '*': return mul(lhs, rhs, ctx_);
            default: return div(lhs, rhs, ctx_);
          }
        });
      }
      case node_kind::factorial: {
        decimal v = eval_node(e.operands[0]);
        const auto n = v.to_int64();
        if (!n || *n < 0) throw evaluation_error("factorial requires a non-negative integer", e.offset);
        return at(e.offset, [&] { return factorial<decimal::limb_digits>(static_cast<std::uint64_t>(*n), ctx_); });
      }
      case node_kind::call: {
        decimal arg = eval_node(e.operands[0]);
        if (policy_.fixed_terms && !noted_fixed_) {
          diagnostics_.push_back("fixed-term mode engaged (" + std::to_string(*policy_.fixed_terms) + " terms)");
          noted_fixed_ = true;
        }
        return at(e.offset, [&] {
          if (e.text == "exp") return exp(arg, ctx_, policy_);
          if (e.text == "sin") return sin(arg, ctx_, policy_);
          return cos(arg, ctx_, policy_);
        });
      }
    }
    throw evaluation_error("malformed expression", e.offset);
  }
};

}  // namespace detail

/// Evaluates bottom-up; every intermediate result is rounded to ctx.
inline eval_outcome evaluate(const expr& e, const context& ctx,
                             const series_policy& policy = series_policy::standard()) {
  detail::evaluator ev(ctx, policy);
  eval_outcome out;
  out.value = ev.eval(e);
  out.rendered = format(out.value);
  out.precision_used = ctx.precision();
  out.diagnostics = ev.take_diagnostics();
  return out;
}

inline eval_outcome evaluate(std::string_view text, const context& ctx,
                             const series_policy& policy = series_policy::standard()) {
  return evaluate(parse_expr(text), ctx, policy);
}

}  // namespace noz::calc
