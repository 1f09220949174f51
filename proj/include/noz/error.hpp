#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace noz {

/// Base of every error raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed number text. `position()` is the byte offset of the offending
/// character (or the end of input).
class parse_error : public error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class division_by_zero : public error {
 public:
  division_by_zero() : error("division by zero") {}
};

/// The leading exponent left the signed 32-bit range.
class exponent_overflow : public error {
 public:
  exponent_overflow() : error("exponent overflow") {}
};

class domain_error : public error {
 public:
  using error::error;
};

class max_terms_exceeded : public error {
 public:
  using error::error;
};

/// An exact result or working buffer would not fit in memory.
class resource_error : public error {
 public:
  using error::error;
};

}  // namespace noz
