#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace edgering {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph or monomial input. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A monomial that is not one of x_i x_j, x_i^-1 x_j^-1, x_i^2, x_i^-2, x_i^-1 x_j.
class UnsupportedGenerator : public ParseError {
 public:
  using ParseError::ParseError;
};

/// Invalid graph construction or a reference to an edge/vertex that does not exist.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// An enumeration exceeded its cap; `flag()` names the CLI flag that raises it.
class CapacityError : public Error {
 public:
  CapacityError(std::string flag, std::size_t cap)
      : Error("more than " + std::to_string(cap) + " cycles; raise " + flag),
        flag_(std::move(flag)),
        cap_(cap) {}
  const std::string& flag() const noexcept { return flag_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::string flag_;
  std::size_t cap_;
};

/// An operation was called with arguments violating its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Operation not defined for this kind of input (e.g. signatures of a cycle with directed edges).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Weights that would give an artificial vertex a nonzero exponent.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace edgering
