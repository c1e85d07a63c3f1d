#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace negsets {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A graph violates simplicity or index bounds.
class InvalidGraphError : public Error {
 public:
  using Error::Error;
};

/// An edge or vertex subset was built for a different underlying graph.
class HostMismatchError : public Error {
 public:
  using Error::Error;
};

/// A vertex sequence that was expected to be a circle is not one.
class InvalidCycleError : public Error {
 public:
  using Error::Error;
};

/// The input does not satisfy the precondition of an operation.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class MalformedCertificateError : public Error {
 public:
  using Error::Error;
};

/// Brute-force search refused an input above its size cap.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

/// The acyclic-negation main loop ran past its iteration budget.
class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

/// Malformed `.sg` input. `line()` is 1-based; 0 means "end of input".
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace negsets
