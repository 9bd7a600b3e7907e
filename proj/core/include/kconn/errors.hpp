#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kconn {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. line() is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Well-formed input describing an invalid graph or family.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A caller broke an operation's precondition.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// The algorithm reached a state its correctness argument rules out.
class InternalInvariantViolation : public Error {
 public:
  using Error::Error;
};

// Brute-force work would exceed the configured subset budget.
class ScaleGuardError : public Error {
 public:
  using Error::Error;
};

}  // namespace kconn
