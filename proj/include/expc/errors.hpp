#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace expc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file. Carries the 1-based line number (0 when the
/// problem is not tied to a line, e.g. a missing header).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An argument violates an operation's precondition (bad vertex index,
/// color out of range, shape mismatch, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The operation is not defined for graphs with loops.
class LoopError : public Error {
 public:
  using Error::Error;
};

/// A hypothesis of an audited statement does not hold for the input
/// (e.g. a triangle where a triangle-free graph is required).
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// A size or search-node budget was exceeded. Never a wrong answer.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace expc
