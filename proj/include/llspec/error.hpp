#pragma once

#include <stdexcept>
#include <string>

namespace llspec {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A requested level exceeds the configured maximum.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// An iterative routine hit its iteration limit.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// Malformed textual input (parameter strings, grids).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A point that was expected to be a root of the characteristic polynomial
/// is not one, or a closed form's side condition does not hold.
class NotARootError : public Error {
 public:
  using Error::Error;
};

/// A closed-form rule was asked for without the witnesses it needs, or its
/// preconditions are not met.
class AssumptionError : public Error {
 public:
  using Error::Error;
};

}  // namespace llspec
