#pragma once

#include <functional>
#include <vector>

#include "idxf/complex_value.hpp"
#include "idxf/gamma_param.hpp"
#include "idxf/quadrature.hpp"

namespace idxf {

// An element of the weighted Bergman space together with a certified
// radial growth bound |f(z)| <= amplitude (1+|z|)^degree exp(rate |z|).
struct BergmanFunction {
  std::function<ComplexValue(ComplexValue)> evaluator;
  double growth_amplitude = 1.0;
  double growth_degree = 0.0;
  double growth_rate = 0.0;
};

// Radial density of the measure (the rho dtheta drho area factor belongs
// to the integrator):
//   d mu_gamma = (2 / (pi Gamma(2 gamma))) rho^(2 gamma - 1)
//                K_{2 gamma - 1}(2 rho) rho dtheta drho.
// The Bessel index is 2*gamma - 1: with the weight rho^(2 gamma - 1) and
// the normalizing constant above, the MacDonald moment identity
//   int_0^inf x^(mu-1) K_nu(x) dx = 2^(mu-2) Gamma((mu+nu)/2) Gamma((mu-nu)/2)
// forces exactly this index for <psi_n, psi_n> = 1. The sometimes-quoted
// index 1/2 - gamma (which coincides only at gamma = 1/2) breaks
// orthonormality and is kept below purely as a regression variant.
double measure_density(ComplexValue z, const GammaParam& gp);

// The 1/2 - gamma index variant, retained for the documented regression
// check. Do not use it for anything else.
double measure_density_printed_index(ComplexValue z, const GammaParam& gp);

// Orthonormal basis element psi_n(z) = z^n / sqrt(n! (2 gamma)_n),
// evaluated in log space for large n.
ComplexValue basis_element(int n, const GammaParam& gp, ComplexValue z);

// Reproducing kernel as the entire series sum_n (z conj(w))^n / ((2g)_n n!).
ComplexValue kernel_series(ComplexValue z, ComplexValue w, const GammaParam& gp,
                           double tol = 1e-14);

// Closed form Gamma(2g) s^(1-2g) I_{2g-1}(2s), s = sqrt(z conj(w)).
// The branch of the square root cancels against the Bessel prefactor,
// so any consistent choice gives the same value.
ComplexValue kernel_closed(ComplexValue z, ComplexValue w, const GammaParam& gp);

// Dispatching evaluator: series for |z conj(w)| <= 25, closed form beyond.
ComplexValue kernel_eval(ComplexValue z, ComplexValue w, const GammaParam& gp);

// <f, g>_gamma = int_C f(z) conj(g(z)) d mu_gamma(z) by polar quadrature.
// Requires growth_rate(f) + growth_rate(g) < 2 so the K-decay wins.
ComplexValue bergman_inner(const BergmanFunction& f, const BergmanFunction& g,
                           const GammaParam& gp, const QuadratureSpec& spec);

// Regression-only variant taking the Bessel index explicitly.
ComplexValue bergman_inner_with_index(const BergmanFunction& f,
                                      const BergmanFunction& g, const GammaParam& gp,
                                      const QuadratureSpec& spec, double bessel_index);

// Ready-made BergmanFunction wrappers with exact growth bounds.
BergmanFunction bergman_basis_function(int n, const GammaParam& gp);
BergmanFunction bergman_kernel_function(ComplexValue w, const GammaParam& gp);
// f(z) = sum_n coeffs[n] psi_n(z).
BergmanFunction bergman_polynomial_function(const std::vector<ComplexValue>& coeffs,
                                            const GammaParam& gp);

}  // namespace idxf
