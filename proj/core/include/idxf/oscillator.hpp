#pragma once

#include <vector>

#include "idxf/complex_value.hpp"
#include "idxf/gamma_param.hpp"

namespace idxf {

// Physical parameters of the relativistic pseudoharmonic oscillator.
// Derived quantities: omega0 = hbar*omega/(m c^2), g0 = m g / hbar^2,
// and the Compton wavelength hbar/(m c).
struct PhysicalConfig {
  double m = 1.0;
  double omega = 1.0;
  double g = 0.0;
  double hbar = 1.0;
  double c = 1.0;

  double omega0() const { return hbar * omega / (m * c * c); }
  double g0() const { return m * g / (hbar * hbar); }
  double compton_lambda() const { return hbar / (m * c); }

  void validate() const;
};

// The two exponent roots
//   alpha_pm = 1/2 + (1/2) sqrt(1 + (2/omega0)(1 +- sqrt(1 - 8 g0 omega0^2))).
struct AlphaPair {
  double alpha_plus;
  double alpha_minus;
};

AlphaPair alpha_pm(const PhysicalConfig& cfg);

// Energy spectrum hbar*omega*(2n + alpha_plus + alpha_minus).
double energy_level(int n, const PhysicalConfig& cfg);

// Under the tuning 8 g omega^2 = m c^4 the two roots coincide and define
// gamma through 2*gamma - 1 = sqrt(1 + 2 m c^2/(hbar omega)); the result
// is always > 1. Throws TuningError when the coupling is not tuned.
GammaParam gamma_from_physical(const PhysicalConfig& cfg);

// omega0 expressed through gamma in the tuned equal-root case:
// omega0 = 1 / (2 gamma (gamma - 1)). (Inverting the coincident-root
// relation (2g-1)^2 - 1 = 2/omega0; the phase factors omega0^{+-ix}
// used throughout are consistent with exactly this form.)
double omega0_of_gamma(const GammaParam& gp);

// Normalization constant
//   c_n = (2^{-1} n! Gamma(n+a+b) Gamma(n+a+1/2) Gamma(n+b+1/2))^{-1/2},
// computed in log space.
double normalization_const(int n, const AlphaPair& ap);

// Orthonormal eigenfunction on L^2(R_+, dx) for the equal-root case:
//   phi_n(x) = c_n (-x)^(gamma) omega0^{ix} Gamma(gamma+ix)
//              S_n(x^2; gamma, gamma, 1/2),
// which collapses to
//   phi_n(x) = c_n exp(2 log Gamma(g+ix) - log Gamma(ix)
//                      + i(x ln omega0 + pi g/2)) S_n(x^2),
// evaluated through one exponential to dodge intermediate overflow.
// Exactly 0 at x = 0.
ComplexValue eigenfunction_eval(int n, const GammaParam& gp, double x);

// The n-independent prefactor above; eigenfunction_eval is
// c_n * eigen_prefactor * S_n. Exposed for the coherent-state series.
ComplexValue eigen_prefactor(const GammaParam& gp, double x);

// Finite expansion over the eigenbasis {phi_n}.
struct EigenExpansion {
  GammaParam gamma;
  std::vector<ComplexValue> coefficients;

  double norm_sq() const;
  ComplexValue eval(double x) const;
};

}  // namespace idxf
