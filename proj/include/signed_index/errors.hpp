#pragma once

#include <stdexcept>
#include <string>

namespace signed_index {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter lies outside the supported range.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Text or numeric input could not be parsed into a well-formed object.
class MalformedInputError : public Error {
 public:
  using Error::Error;
};

/// An object violates one of its structural invariants.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// A move was applied to a graph whose signs do not match the move.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The supplied eigenvector does not belong to the graph's top eigenvalue.
class StaleEigenvectorError : public Error {
 public:
  StaleEigenvectorError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// The Jacobi iteration hit its sweep cap.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double off_norm)
      : Error(what), off_norm_(off_norm) {}
  double off_norm() const noexcept { return off_norm_; }

 private:
  double off_norm_;
};

}  // namespace signed_index
