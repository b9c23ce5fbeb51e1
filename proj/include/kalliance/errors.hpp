#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kalliance {

/// Raised when caller-supplied data violates an operation's precondition.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed graph text. Carries the 1-based line number of the offending line.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// The eigensolver failed to converge or produced an out-of-tolerance result.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kalliance
