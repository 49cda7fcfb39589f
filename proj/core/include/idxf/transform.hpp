#pragma once

#include <functional>
#include <string>
#include <vector>

#include "idxf/bergman.hpp"
#include "idxf/complex_value.hpp"
#include "idxf/gamma_param.hpp"
#include "idxf/oscillator.hpp"
#include "idxf/quadrature.hpp"
#include "idxf/report.hpp"

namespace idxf {

// Label of a coherent state: a point z of the complex plane plus the
// space parameter. Evaluation is validated for |z| <= 25.
struct CoherentStateLabel {
  ComplexValue z;
  GammaParam gamma;

  void validate() const;
};

inline constexpr double kCoherentStateBox = 25.0;

// Truncation order for the superposition series: smallest N with
//   |z|^(N+1) / sqrt((N+1)! (2g)_{N+1}) < 1e-13 sqrt(K(z,z)),
// from the ratio test on the coefficients (each |phi_n| has unit norm).
int cs_auto_order(const CoherentStateLabel& label);

// Coherent-state wavefunction by its eigenfunction superposition:
//   <x|z;g> = K(z,z)^{-1/2} sum_{n<=N} z^n / sqrt((2g)_n n!) phi_n(x).
ComplexValue cs_series(double x, const CoherentStateLabel& label, int N);

// Closed form of the same wavefunction:
//   <x|z;g> = sqrt(2) i^g omega0^{ix} Gamma^2(g+ix) e^z
//             2F2(g+ix, g-ix; 2g, g+1/2; -z)
//             / (sqrt(K(z,z)) sqrt(Gamma(2g)) Gamma(g+1/2) Gamma(ix)).
// The sqrt(2) belongs to c_0 and is required for unit normalization;
// dropping it (a classic slip when regrouping c_n) makes the norm 1/2.
// Equals 0 at x = 0; at z = 0 the kernel factor is 1 and the value is
// phi_0(x) exactly.
ComplexValue cs_closed(double x, const CoherentStateLabel& label);

// A function on (0, inf) with a certified decay envelope for |eval|.
struct HalfLineFunction {
  std::function<ComplexValue(double)> eval;
  DecayEnvelope envelope;
};

// Transform values on a grid of labels, in request order.
struct TransformResult {
  GammaParam gamma;
  std::vector<std::pair<ComplexValue, ComplexValue>> values;  // (z, F(z))
  std::string input_descriptor;
};

// The index hypergeometric transform, quadrature path:
//   F[phi](z) = K(z,z)^{1/2} int_0^inf <x|z;g> conj(phi(x)) dx,
// conjugate-linear in phi, holomorphic in z. Grid points evaluate
// independently (possibly concurrently); ordering follows the request.
TransformResult transform_apply_sampled(const HalfLineFunction& phi,
                                        const std::vector<ComplexValue>& grid,
                                        const GammaParam& gp,
                                        const QuadratureSpec& spec);

// Exact algebraic path for phi = sum_n c_n phi_n:
//   F[phi](z) = sum_n conj(c_n) psi_n(z).
TransformResult transform_apply_coeffs(const EigenExpansion& expansion,
                                       const std::vector<ComplexValue>& grid);

// Norm comparison ||phi||^2 on the half-line (quadrature over the summed
// eigenfunctions) against ||F[phi]||^2 in the Bergman space (polar
// quadrature over the exact image polynomial).
VerificationReport isometry_report(const EigenExpansion& expansion,
                                   const GammaParam& gp, const QuadratureSpec& spec,
                                   double tol = 1e-6);

// Decay envelope certified for the coherent-state wavefunction x -> <x|z;g>
// (amplitude calibrated, rate derived from the gamma-factor decay with
// slack for the subexponential hypergeometric growth).
DecayEnvelope coherent_state_envelope(const CoherentStateLabel& label);

// Envelope for a finite eigen-expansion evaluated on the half-line.
DecayEnvelope expansion_envelope(const EigenExpansion& expansion);

}  // namespace idxf
