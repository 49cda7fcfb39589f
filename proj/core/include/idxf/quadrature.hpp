#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "idxf/complex_value.hpp"

namespace idxf {

// Controls every deterministic integral in the library.
struct QuadratureSpec {
  int points_per_panel = 16;  // >= 4; doubled on refinement up to 512
  double panel_growth = 1.7;  // >= 1; geometric panel widths toward 0
  double cutoff = 1.0;        // lower bound for the half-line cutoff
  double tol = 1e-10;
};

// Certified radial upper bound A (1+x)^d exp(-r x) or A (1+x)^d exp(-r x^2).
// Envelopes drive cutoff selection and are enforced at every node: an
// integrand observed above its envelope is a hard EnvelopeError.
struct DecayEnvelope {
  enum class Kind { ExponentialRate, SuperExponential };
  Kind kind = Kind::ExponentialRate;
  double rate = 1.0;         // > 0
  double poly_degree = 0.0;  // >= 0
  double amplitude = 1.0;    // > 0

  double value(double x) const;
  // Rigorous bound on int_X^inf value(x) dx; +inf when X is below the
  // region where the bound applies (rate*X >= 2(degree+1), resp.
  // rate*X^2 >= degree+1).
  double tail_bound(double X) const;
};

// Radial tail contract for disk integrals: env bounds rho * max_theta |g|
// for rho >= valid_from.
struct RadialTail {
  DecayEnvelope env;
  double valid_from = 0.0;
};

// Gauss-Legendre nodes and weights on [-1, 1], 2 <= n <= 512. Rules are
// computed once and cached; cached rules are immutable.
std::pair<std::vector<double>, std::vector<double>> gauss_legendre_rule(int n);

using RealIntegrand = std::function<ComplexValue(double)>;
using PolarIntegrand = std::function<ComplexValue(double, double)>;

// int_0^inf f(x) dx by composite Gauss-Legendre over panels that shrink
// geometrically toward 0, up to a cutoff X with int_X^inf env <= tol/10.
// Points per panel double until two successive refinements agree to tol.
ComplexValue integrate_halfline(const RealIntegrand& f, const DecayEnvelope& env,
                                const QuadratureSpec& spec);

// int_C g dA in polar form: trapezoid in theta (spectrally accurate and
// exactly annihilating pure Fourier modes below the point count) times
// composite Gauss-Legendre in rho, including the rho area factor.
// rho_max is extended until the declared tail bound meets tol/10.
ComplexValue integrate_disk_polar(const PolarIntegrand& g, double rho_max,
                                  const std::optional<RadialTail>& tail,
                                  const QuadratureSpec& spec);

// Fits the amplitude of an envelope of the given shape over |f| on a
// probe grid covering (0, probe_hi], with a safety factor. The rate and
// degree must come from analysis of the integrand family; only the
// scale is calibrated.
DecayEnvelope calibrate_envelope(const RealIntegrand& f, DecayEnvelope::Kind kind,
                                 double rate, double poly_degree, double probe_hi,
                                 int probe_points = 256, double safety = 3.0);

}  // namespace idxf
