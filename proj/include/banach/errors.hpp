#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace banach {

/// Base of every error raised by the library. The CLI maps subclasses onto
/// exit codes, so each failure mode gets its own type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class OverlapError : public Error {
 public:
  using Error::Error;
};

class NegativeResult : public Error {
 public:
  using Error::Error;
};

class HorizonExceeded : public Error {
 public:
  using Error::Error;
};

class BadLength : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class EmptySelection : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class NoSuitableRun : public Error {
 public:
  using Error::Error;
};

class DisjointnessViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace banach
