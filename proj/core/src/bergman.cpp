#include "idxf/bergman.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <unordered_map>

#include "idxf/bessel.hpp"
#include "idxf/gamma.hpp"

namespace idxf {
namespace {

constexpr double kPi = std::numbers::pi;

double density_with_index(double rho, const GammaParam& gp, double nu) {
  if (rho <= 0.0) throw DomainError("measure_density: z = 0 not evaluable");
  const double norm = 2.0 / (kPi * std::tgamma(2.0 * gp.gamma));
  return norm * std::pow(rho, 2.0 * gp.gamma - 1.0) * bessel_k(nu, 2.0 * rho);
}

// Rigorous large-rho bound: K_nu(x) <= sqrt(pi/(2x)) e^{-x} kappa with
// kappa = (1 - (2nu-1)/(4x))^{-(nu+1/2)} for nu >= 1/2, x > (2nu-1)/4
// (from the standard integral representation), and kappa = 1 for nu < 1/2.
double k_tail_factor(double nu, double x) {
  nu = std::abs(nu);
  if (nu < 0.5) return 1.0;
  const double c = (2.0 * nu - 1.0) / (4.0 * x);
  if (c >= 0.75) throw DomainError("k_tail_factor: x too small for the bound");
  return std::pow(1.0 - c, -(nu + 0.5));
}

ComplexValue inner_impl(const BergmanFunction& f, const BergmanFunction& g,
                        const GammaParam& gp, const QuadratureSpec& spec,
                        double bessel_index) {
  const double rate_sum = f.growth_rate + g.growth_rate;
  if (!(rate_sum < 2.0)) {
    throw EnvelopeError("bergman_inner: combined growth rate reaches the K decay");
  }

  // The density depends only on rho; memoizing it removes the dominant
  // cost of the angular sweep. Nodes are deterministic, so keys repeat.
  auto cache = std::make_shared<std::unordered_map<double, double>>();
  const GammaParam gp_copy = gp;
  const double nu = bessel_index;
  auto density = [cache, gp_copy, nu](double rho) {
    auto it = cache->find(rho);
    if (it != cache->end()) return it->second;
    const double d = density_with_index(rho, gp_copy, nu);
    cache->emplace(rho, d);
    return d;
  };

  auto fe = f.evaluator;
  auto ge = g.evaluator;
  PolarIntegrand integrand = [fe, ge, density](double rho, double theta) {
    const ComplexValue z = std::polar(rho, theta);
    return fe(z) * std::conj(ge(z)) * density(rho);
  };

  // Radial tail envelope for rho * max_theta |integrand|, valid beyond
  // the K-bound threshold.
  RadialTail tail;
  tail.valid_from = std::max(1.0, std::abs(nu));
  const double kappa = k_tail_factor(nu, 2.0 * tail.valid_from);
  tail.env.kind = DecayEnvelope::Kind::ExponentialRate;
  tail.env.rate = 2.0 - rate_sum;
  tail.env.poly_degree = f.growth_degree + g.growth_degree + 2.0 * gp.gamma + 0.5;
  tail.env.amplitude = f.growth_amplitude * g.growth_amplitude *
                       (2.0 / (kPi * std::tgamma(2.0 * gp.gamma))) *
                       std::sqrt(kPi / 4.0) * kappa;

  return integrate_disk_polar(integrand, 25.0, tail, spec);
}

}  // namespace

double measure_density(ComplexValue z, const GammaParam& gp) {
  require_finite(z, "measure_density");
  return density_with_index(std::abs(z), gp, 2.0 * gp.gamma - 1.0);
}

double measure_density_printed_index(ComplexValue z, const GammaParam& gp) {
  require_finite(z, "measure_density");
  return density_with_index(std::abs(z), gp, 0.5 - gp.gamma);
}

ComplexValue basis_element(int n, const GammaParam& gp, ComplexValue z) {
  if (n < 0) throw DomainError("basis_element: negative index");
  require_finite(z, "basis_element");
  const double two_g = 2.0 * gp.gamma;
  if (n <= 30) {
    ComplexValue zn = 1.0;
    double norm = 1.0;
    for (int k = 0; k < n; ++k) {
      zn *= z;
      norm *= (k + 1.0) * (two_g + k);
    }
    return zn / std::sqrt(norm);
  }
  if (z == 0.0) return 0.0;
  const double log_norm =
      std::lgamma(n + 1.0) + std::lgamma(two_g + n) - std::lgamma(two_g);
  return std::exp(static_cast<double>(n) * std::log(z) - 0.5 * log_norm);
}

ComplexValue kernel_series(ComplexValue z, ComplexValue w, const GammaParam& gp,
                           double tol) {
  require_finite(z, "kernel_series");
  require_finite(w, "kernel_series");
  if (!(tol > 0.0)) throw DomainError("kernel_series: tol must be positive");
  const ComplexValue t = z * std::conj(w);
  ComplexValue sum = 1.0, comp = 0.0, term = 1.0;
  const double two_g = 2.0 * gp.gamma;
  int small_run = 0;
  for (int n = 0; n < 2000; ++n) {
    term *= t / ((n + 1.0) * (two_g + n));
    const ComplexValue y = term - comp;
    const ComplexValue s = sum + y;
    comp = (s - sum) - y;
    sum = s;
    if (std::abs(term) <= tol * std::abs(sum)) {
      if (++small_run >= 2) return sum;
    } else {
      small_run = 0;
    }
  }
  throw NoConvergence("kernel_series: term cap exceeded");
}

ComplexValue kernel_closed(ComplexValue z, ComplexValue w, const GammaParam& gp) {
  require_finite(z, "kernel_closed");
  require_finite(w, "kernel_closed");
  const ComplexValue t = z * std::conj(w);
  if (t == 0.0) return 1.0;  // series limit
  const ComplexValue s = std::sqrt(t);
  const double two_g = 2.0 * gp.gamma;
  return std::tgamma(two_g) * std::exp((1.0 - two_g) * std::log(s)) *
         bessel_i(two_g - 1.0, 2.0 * s);
}

ComplexValue kernel_eval(ComplexValue z, ComplexValue w, const GammaParam& gp) {
  if (std::abs(z * std::conj(w)) <= 25.0) return kernel_series(z, w, gp);
  return kernel_closed(z, w, gp);
}

ComplexValue bergman_inner(const BergmanFunction& f, const BergmanFunction& g,
                           const GammaParam& gp, const QuadratureSpec& spec) {
  return inner_impl(f, g, gp, spec, 2.0 * gp.gamma - 1.0);
}

ComplexValue bergman_inner_with_index(const BergmanFunction& f,
                                      const BergmanFunction& g, const GammaParam& gp,
                                      const QuadratureSpec& spec, double bessel_index) {
  return inner_impl(f, g, gp, spec, bessel_index);
}

BergmanFunction bergman_basis_function(int n, const GammaParam& gp) {
  if (n < 0) throw DomainError("bergman_basis_function: negative index");
  BergmanFunction f;
  const GammaParam gp_copy = gp;
  f.evaluator = [n, gp_copy](ComplexValue z) { return basis_element(n, gp_copy, z); };
  double norm = 1.0;  // n! (2g)_n
  for (int k = 0; k < n; ++k) norm *= (k + 1.0) * (2.0 * gp.gamma + k);
  f.growth_amplitude = 1.0 / std::sqrt(norm);
  f.growth_degree = n;
  f.growth_rate = 0.0;
  return f;
}

BergmanFunction bergman_kernel_function(ComplexValue w, const GammaParam& gp) {
  BergmanFunction f;
  const GammaParam gp_copy = gp;
  f.evaluator = [w, gp_copy](ComplexValue z) { return kernel_eval(z, w, gp_copy); };
  // |K(z, w)| <= sum (|z||w|)^n / ((2g)_n n!) <= e^{|z||w|} for 2g >= 1.
  f.growth_amplitude = 1.0;
  f.growth_degree = 0.0;
  f.growth_rate = std::abs(w);
  return f;
}

BergmanFunction bergman_polynomial_function(const std::vector<ComplexValue>& coeffs,
                                            const GammaParam& gp) {
  BergmanFunction f;
  const GammaParam gp_copy = gp;
  const std::vector<ComplexValue> c = coeffs;
  f.evaluator = [c, gp_copy](ComplexValue z) {
    ComplexValue acc = 0.0;
    for (std::size_t n = 0; n < c.size(); ++n) {
      if (c[n] != 0.0) acc += c[n] * basis_element(static_cast<int>(n), gp_copy, z);
    }
    return acc;
  };
  double amp = 1e-300;
  double norm = 1.0;
  for (std::size_t n = 0; n < c.size(); ++n) {
    amp += std::abs(c[n]) / std::sqrt(norm);
    norm *= (n + 1.0) * (2.0 * gp.gamma + n);
  }
  f.growth_amplitude = amp;
  f.growth_degree = c.empty() ? 0.0 : static_cast<double>(c.size() - 1);
  f.growth_rate = 0.0;
  return f;
}

}  // namespace idxf
