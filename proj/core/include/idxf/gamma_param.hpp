#pragma once

#include <cmath>

#include "idxf/errors.hpp"

namespace idxf {

// Label of every space and transform in the library. Strict mode pins
// 2*gamma to a positive integer; extended-real mode admits any real
// gamma >= 1/2 (the Bergman machinery is well defined there, and the
// oscillator link generically produces non-half-integer gamma).
enum class GammaMode { kStrictHalfInteger, kExtendedReal };

struct GammaParam {
  double gamma = 1.0;
  GammaMode mode = GammaMode::kStrictHalfInteger;

  static GammaParam strict(double g) {
    validate(g, GammaMode::kStrictHalfInteger);
    return {g, GammaMode::kStrictHalfInteger};
  }
  static GammaParam extended(double g) {
    validate(g, GammaMode::kExtendedReal);
    return {g, GammaMode::kExtendedReal};
  }
  static GammaParam make(double g, GammaMode m) {
    validate(g, m);
    return {g, m};
  }

  static void validate(double g, GammaMode m) {
    if (!std::isfinite(g) || !(g >= 0.5)) {
      throw DomainError("GammaParam: requires gamma >= 1/2");
    }
    if (m == GammaMode::kStrictHalfInteger) {
      const double two_g = 2.0 * g;
      if (std::abs(two_g - std::round(two_g)) > 1e-12) {
        throw DomainError("GammaParam: strict mode requires 2*gamma integer");
      }
    }
  }
};

// Oscillator-linked features need gamma > 1 so that omega0 = 1/(2g(g-1))
// stays positive and the phase omega0^{ix} unimodular.
inline void require_oscillator_gamma(const GammaParam& gp) {
  if (!(gp.gamma > 1.0)) {
    throw DomainError("oscillator features require gamma > 1");
  }
}

}  // namespace idxf
