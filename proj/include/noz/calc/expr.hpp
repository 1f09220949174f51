#pragma once

// Expression trees and the recursive-descent parser used by nozcalc.
//
// Grammar (whitespace is insignificant between tokens):
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('-' | '+') unary | postfix
//   postfix := primary '!'*
//   primary := number | name '(' expr ')' | '(' expr ')'
//   name    := 'exp' | 'sin' | 'cos'
//
// Number literals use the library's text format without a sign.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "noz/decimal.hpp"
#include "noz/error.hpp"

namespace noz::calc {

class syntax_error : public noz::error {
 public:
  syntax_error(const std::string& expected, std::size_t offset)
      : noz::error("expected " + expected + " at offset " + std::to_string(offset)),
        expected_(expected),
        offset_(offset) {}
  const std::string& expected() const noexcept { return expected_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::string expected_;
  std::size_t offset_;
};

enum class node_kind { number, negate, binary, factorial, call };

/// One node of a parsed expression. `offset` is the byte position of the
/// token that produced it (the operator for unary/binary/postfix nodes).
struct expr {
  node_kind kind = node_kind::number;
  std::size_t offset = 0;
  std::string text;  // literal for numbers, function name for calls
  char op = 0;       // '+', '-', '*', '/' for binary nodes
  std::vector<expr> operands;

  friend bool operator==(const expr&, const expr&) = default;
};

inline expr make_number(std::string literal, std::size_t offset) {
  return expr{node_kind::number, offset, std::move(literal), 0, {}};
}
inline expr make_negate(expr operand, std::size_t offset) {
  return expr{node_kind::negate, offset, {}, 0, {std::move(operand)}};
}
inline expr make_binary(char op, expr lhs, expr rhs, std::size_t offset) {
  return expr{node_kind::binary, offset, {}, op, {std::move(lhs), std::move(rhs)}};
}
inline expr make_factorial(expr operand, std::size_t offset) {
  return expr{node_kind::factorial, offset, {}, 0, {std::move(operand)}};
}
inline expr make_call(std::string name, expr argument, std::size_t offset) {
  return expr{node_kind::call, offset, std::move(name), 0, {std::move(argument)}};
}

/// Prefix rendering, e.g. "(+ 1 (* 2 3))". Used by tests and --debug output.
inline std::string to_sexpr(const expr& e) {
  switch (e.kind) {
    case node_kind::number: return e.text;
    case node_kind::negate: return "(neg " + to_sexpr(e.operands[0]) + ")";
    case node_kind::binary:
      return std::string("(") + e.op + " " + to_sexpr(e.operands[0]) + " " + to_sexpr(e.operands[1]) + ")";
    case node_kind::factorial: return "(! " + to_sexpr(e.operands[0]) + ")";
    case node_kind::call: return "(" + e.text + " " + to_sexpr(e.operands[0]) + ")";
  }
  return {};
}

namespace detail {

class parser {
 public:
  explicit parser(std::string_view text) : text_(text) {}

  expr parse() {
    expr e = parse_expr();
    skip_space();
    if (pos_ < text_.size()) throw syntax_error(peek() == ')' ? "end of input" : "operator", pos_);
    return e;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  static bool is_digit(char c) { return c >= '0' && c <= '9'; }

  expr parse_expr() {
    expr lhs = parse_term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      const std::size_t at = pos_++;
      lhs = make_binary(c, std::move(lhs), parse_term(), at);
    }
    return lhs;
  }

  expr parse_term() {
    expr lhs = parse_unary();
    for (char c = peek(); c == '*' || c == '/'; c = peek()) {
      const std::size_t at = pos_++;
      lhs = make_binary(c, std::move(lhs), parse_unary(), at);
    }
    return lhs;
  }

  expr parse_unary() {
    const char c = peek();
    if (c == '-') {
      const std::size_t at = pos_++;
      return make_negate(parse_unary(), at);
    }
    if (c == '+') {
      ++pos_;
      return parse_unary();
    }
    return parse_postfix();
  }

  expr parse_postfix() {
    expr e = parse_primary();
    while (peek() == '!') {
      const std::size_t at = pos_++;
      e = make_factorial(std::move(e), at);
    }
    return e;
  }

  expr parse_primary() {
    const char c = peek();
    const std::size_t at = pos_;
    if (c == '(') {
      ++pos_;
      expr inner = parse_expr();
      if (peek() != ')') throw syntax_error("')'", pos_);
      ++pos_;
      return inner;
    }
    if (is_digit(c) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < text_.size() && std::isalpha(static_cast<unsigned char>(text_[end]))) ++end;
      std::string name(text_.substr(pos_, end - pos_));
      if (name != "exp" && name != "sin" && name != "cos") throw syntax_error("function name exp, sin or cos", at);
      pos_ = end;
      if (peek() != '(') throw syntax_error("'('", pos_);
      ++pos_;
      expr argument = parse_expr();
      if (peek() != ')') throw syntax_error("')'", pos_);
      ++pos_;
      return make_call(std::move(name), std::move(argument), at);
    }
    throw syntax_error(c == '\0' ? "operand before end of input" : "number, function or '('", pos_);
  }

  expr parse_number() {
    const std::size_t start = pos_;
    std::size_t end = pos_;
    while (end < text_.size() && (is_digit(text_[end]) || text_[end] == '.')) ++end;
    if (end < text_.size() && (text_[end] == 'e' || text_[end] == 'E')) {
      std::size_t k = end + 1;
      if (k < text_.size() && (text_[k] == '+' || text_[k] == '-')) ++k;
      if (k < text_.size() && is_digit(text_[k])) {
        while (k < text_.size() && is_digit(text_[k])) ++k;
        end = k;
      } else {
        throw syntax_error("exponent digits", k);
      }
    }
    std::string literal(text_.substr(start, end - start));
    try {
      (void)decimal::parse_exact(literal);
    } catch (const parse_error& e) {
      throw syntax_error(std::string("number (") + e.what() + ")", start + e.position());
    } catch (const exponent_overflow&) {
      // Representability is an evaluation concern.
    }
    pos_ = end;
    return make_number(std::move(literal), start);
  }
};

}  // namespace detail

inline expr parse_expr(std::string_view text) { return detail::parser(text).parse(); }

}  // namespace noz::calc
