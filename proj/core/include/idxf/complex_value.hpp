#pragma once

#include <cmath>
#include <complex>
#include <string>

#include "idxf/errors.hpp"

namespace idxf {

// All complex arithmetic in the library runs over this type. NaN and
// infinity are error states and are rejected at API boundaries.
using ComplexValue = std::complex<double>;

inline constexpr ComplexValue kImaginaryUnit{0.0, 1.0};

inline bool is_finite(ComplexValue z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline void require_finite(ComplexValue z, const char* what) {
  if (!is_finite(z)) {
    throw DomainError(std::string(what) + ": non-finite complex argument");
  }
}

inline void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw DomainError(std::string(what) + ": non-finite argument");
  }
}

// True when z lies within `tol` (on both components) of a real integer <= 0.
inline bool near_nonpositive_integer(ComplexValue z, double tol = 1e-12) {
  if (std::abs(z.imag()) > tol) return false;
  const double r = std::round(z.real());
  return r <= 0.5 && std::abs(z.real() - r) <= tol;
}

// Exact test: a real nonpositive integer stored without rounding error.
// Used for series termination, where the caller passes -n exactly.
inline bool exact_nonpositive_integer(ComplexValue z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real());
}

}  // namespace idxf
