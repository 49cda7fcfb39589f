#include "idxf/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "idxf/gamma.hpp"
#include "idxf/quadrature.hpp"

namespace idxf {
namespace {

// Exponent of the K integrand after t = e^u:
//   K_nu(rho) = (1/2)(rho/2)^nu int_R exp(phi(u)) du
//   phi(u) = -nu u - e^u - (rho^2/4) e^{-u}
double k_exponent(double u, double nu, double q) {
  return -nu * u - std::exp(u) - q * std::exp(-u);
}

}  // namespace

ComplexValue bessel_i(double nu, ComplexValue zeta, double tol) {
  require_finite(zeta, "bessel_i");
  if (!(nu >= 0.0)) throw DomainError("bessel_i: requires nu >= 0");
  if (!(tol > 0.0)) throw DomainError("bessel_i: tol must be positive");
  if (std::abs(zeta) > kBesselISeriesCap) {
    throw RangeError("bessel_i: |zeta| beyond series cap");
  }
  if (zeta == 0.0) return nu == 0.0 ? 1.0 : 0.0;

  const ComplexValue w = zeta / 2.0;
  const ComplexValue w2 = w * w;
  // (zeta/2)^nu / Gamma(nu+1), principal branch.
  const ComplexValue prefactor =
      std::exp(nu * std::log(w) - log_gamma(ComplexValue(nu + 1.0, 0.0)));

  ComplexValue sum = 1.0, comp = 0.0, term = 1.0;
  int small_run = 0;
  for (int n = 0; n < 400; ++n) {
    term *= w2 / ((n + 1.0) * (nu + n + 1.0));
    const ComplexValue y = term - comp;
    const ComplexValue t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    if (std::abs(term) <= tol * std::abs(sum)) {
      if (++small_run >= 2) return prefactor * sum;
    } else {
      small_run = 0;
    }
  }
  throw NoConvergence("bessel_i: series did not converge");
}

double bessel_k(double nu, double rho, double tol) {
  require_finite(rho, "bessel_k");
  require_finite(nu, "bessel_k");
  if (!(rho > 0.0)) throw DomainError("bessel_k: requires rho > 0");
  if (std::abs(nu) > kBesselKMaxOrder) {
    throw RangeError("bessel_k: |nu| beyond validated order");
  }

  const double q = rho * rho / 4.0;
  // Interior maximum of phi at e^u = (-nu + hypot(nu, rho)) / 2; for
  // nu > 0 the conjugate form avoids cancellation when rho << nu.
  const double s0 = nu > 0.0 ? rho * rho / (2.0 * (nu + std::hypot(nu, rho)))
                             : 0.5 * (-nu + std::hypot(nu, rho));
  const double u0 = std::log(s0);
  const double peak = k_exponent(u0, nu, q);

  // March outward until the integrand is negligible against the peak.
  const double drop = 48.0;
  double hi = u0 + 1.0;
  while (k_exponent(hi, nu, q) - peak > -drop) hi += 1.0;
  double lo = u0 - 1.0;
  while (k_exponent(lo, nu, q) - peak > -drop) lo -= 1.0;

  // Composite Gauss-Legendre on [lo, hi]; the substitution leaves a
  // smooth unit-scale profile, so uniform panels of width ~1 suffice.
  const int npanels = std::max(4, static_cast<int>(std::ceil(hi - lo)));
  const double target = std::max(tol, 1e-11) / 4.0;

  double prev = 0.0;
  bool have_prev = false;
  for (int ppp = 8; ppp <= 512; ppp *= 2) {
    const auto& [nodes, weights] = gauss_legendre_rule(ppp);
    double sum = 0.0, comp = 0.0;
    for (int j = 0; j < npanels; ++j) {
      const double a = lo + (hi - lo) * j / npanels;
      const double b = lo + (hi - lo) * (j + 1) / npanels;
      const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
      for (int i = 0; i < ppp; ++i) {
        const double u = mid + half * nodes[i];
        const double v = half * weights[i] * std::exp(k_exponent(u, nu, q) - peak);
        const double y = v - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
      }
    }
    if (have_prev && std::abs(sum - prev) <= target * std::abs(sum)) {
      const double log_k = -std::numbers::ln2 + nu * std::log(rho / 2.0) + peak +
                           std::log(sum);
      if (log_k > 708.0) throw OverflowError("bessel_k: result overflows double");
      return std::exp(log_k);
    }
    prev = sum;
    have_prev = true;
  }
  throw QuadratureFailure("bessel_k: tolerance not achieved");
}

}  // namespace idxf
