#pragma once

#include "idxf/complex_value.hpp"

namespace idxf {

// Modified Bessel function of the first kind by its power series
//   I_nu(zeta) = sum_n (zeta/2)^(nu+2n) / (n! Gamma(nu+n+1)),
// with the principal branch of (zeta/2)^nu. Series-only policy: the
// argument is capped at |zeta| <= 60 (RangeError beyond), which covers
// every kernel evaluation in scope.
ComplexValue bessel_i(double nu, ComplexValue zeta, double tol = 1e-14);

inline constexpr double kBesselISeriesCap = 60.0;

// MacDonald function from its integral representation
//   K_nu(rho) = (1/2) (rho/2)^nu int_0^inf t^(-nu-1) exp(-t - rho^2/(4t)) dt,
// evaluated after the substitution t = e^u (the integrand then decays
// doubly exponentially on both ends). The peak is factored out in log
// space, so large |nu| does not overflow intermediates. Relative
// accuracy <= max(tol, 1e-11); validated for |nu| <= 200.
double bessel_k(double nu, double rho, double tol = 1e-12);

inline constexpr double kBesselKMaxOrder = 200.0;

}  // namespace idxf
