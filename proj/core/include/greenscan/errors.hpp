#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace greenscan {

/// Malformed or inconsistent user input (CLI exit code 1).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax error in an algebra or module file, with 1-based position.
class ParseError : public InputError {
 public:
  ParseError(const std::string& message, int line, int column)
      : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                   message),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// A bounded search could not decide (CLI exit code 2).
class BoundExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structured refusal with a machine-readable reason code (exit code 2):
/// NOT_DISCRETE, BOUND_EXHAUSTED or NOT_GREEN_PATH.
class Refusal : public std::runtime_error {
 public:
  Refusal(std::string code, const std::string& detail) : std::runtime_error(detail), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

/// A theorem-backed cross-check failed: a bug, never an input problem (exit code 3).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace greenscan
