#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pdalg {

/// Base class of all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed expression, form or file text. `position()` is a 0-based
/// character offset into the parsed string.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An operation was applied outside its domain: division by zero, singular
/// matrices, chart mismatch, real/complex mode mismatch and so on.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A structure, constants or report file that does not match its format.
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace pdalg
