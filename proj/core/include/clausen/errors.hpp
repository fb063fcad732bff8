#pragma once

#include <stdexcept>
#include <string>

namespace clausen {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid precision configuration (digits out of range, bad guard digits).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// An argument violates an operation's precondition (odd Bernoulli index,
/// inadmissible discriminant, malformed expression).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// A mathematically valid input lies outside the supported domain
/// (s <= 1 for Hurwitz zeta, d > 0 for the Clausen route).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Unknown identity id or similar failed lookup.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// Working precision too low for the requested operation.
class PrecisionError : public Error {
 public:
  PrecisionError(const std::string& what, int minimum_digits)
      : Error(what), minimum_digits_(minimum_digits) {}
  int minimum_digits() const noexcept { return minimum_digits_; }

 private:
  int minimum_digits_;
};

/// A numerical iteration (quadrature refinement, series) failed to converge.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, int levels_used)
      : Error(what), levels_used_(levels_used) {}
  int levels_used() const noexcept { return levels_used_; }

 private:
  int levels_used_;
};

/// The integrand returned NaN or infinity at a quadrature abscissa.
class IntegrandError : public Error {
 public:
  using Error::Error;
};

}  // namespace clausen
