#pragma once

#include <stdexcept>
#include <string>

namespace idxf {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Evaluation requested at (or within tolerance of) a pole.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Result or intermediate quantity not representable in double precision.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// Argument outside the validated range of an implementation.
class RangeError : public Error {
 public:
  using Error::Error;
};

// A series failed to meet its tolerance within the term budget.
class NoConvergence : public Error {
 public:
  using Error::Error;
};

// A denominator Pochhammer factor vanished before the series terminated.
class DenominatorPole : public Error {
 public:
  using Error::Error;
};

// Panel refinement exhausted without meeting the requested tolerance.
class QuadratureFailure : public Error {
 public:
  using Error::Error;
};

// An integrand exceeded its certified envelope, or a declared envelope
// cannot account for the requested tail. Never downgraded to a warning.
class EnvelopeError : public Error {
 public:
  using Error::Error;
};

// Physical parameters violate the coupling condition 8*g*omega^2 = m*c^4.
class TuningError : public Error {
 public:
  using Error::Error;
};

// Invalid run configuration (CLI / config file level).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace idxf
