#pragma once

#include "idxf/complex_value.hpp"

namespace idxf {

// Principal-branch complex log-gamma. Real on the positive real axis,
// conjugate-symmetric (log_gamma(conj z) = conj(log_gamma(z)) bitwise up
// to the sign of the imaginary part), and exp(log_gamma(z)) reproduces
// Gamma(z) to better than 1e-13 relative for |z| <= 50.
//
// Throws PoleError within 1e-12 of a nonpositive integer and
// OverflowError for |Re z| beyond kLogGammaMaxRe.
ComplexValue log_gamma(ComplexValue z);

inline constexpr double kLogGammaMaxRe = 1e12;

// Gamma(z) = exp(log_gamma(z)).
ComplexValue gamma_fn(ComplexValue z);

// Rising factorial (a)_n = a (a+1) ... (a+n-1), running product.
// (a)_0 = 1; zero factors are legal and give 0.
ComplexValue pochhammer(ComplexValue a, int n);

// Generalized degree (-x)^(gamma) = i^gamma Gamma(gamma+ix) / Gamma(ix)
// with i^gamma = exp(i pi gamma / 2), the principal branch. Exactly 0 at
// x = 0 (the 1/Gamma(ix) zero wins), preserving the hard-wall boundary
// condition of the eigenfunctions.
ComplexValue generalized_degree(double x, double gamma);

// |Gamma(a+ix)|^2 without cancellation: exp(2 Re log_gamma(a+ix)).
// Requires a > 0, or a = 0 with x != 0.
double abs_gamma_sq(double a, double x);

}  // namespace idxf
