#include "idxf/oscillator.hpp"

#include <cmath>
#include <numbers>

#include "idxf/gamma.hpp"
#include "idxf/hyper.hpp"

namespace idxf {

void PhysicalConfig::validate() const {
  const bool positives = m > 0.0 && omega > 0.0 && hbar > 0.0 && c > 0.0;
  if (!positives || !(g >= 0.0)) {
    throw DomainError("PhysicalConfig: m, omega, hbar, c > 0 and g >= 0 required");
  }
}

AlphaPair alpha_pm(const PhysicalConfig& cfg) {
  cfg.validate();
  const double w0 = cfg.omega0();
  const double disc = 1.0 - 8.0 * cfg.g0() * w0 * w0;
  if (disc < 0.0) {
    throw DomainError("alpha_pm: 8 g0 omega0^2 > 1 gives complex exponents");
  }
  const double root = std::sqrt(disc);
  const auto branch = [w0](double s) {
    return 0.5 + 0.5 * std::sqrt(1.0 + 2.0 / w0 * (1.0 + s));
  };
  return {branch(root), branch(-root)};
}

double energy_level(int n, const PhysicalConfig& cfg) {
  if (n < 0) throw DomainError("energy_level: negative level");
  const AlphaPair ap = alpha_pm(cfg);
  return cfg.hbar * cfg.omega * (2.0 * n + ap.alpha_plus + ap.alpha_minus);
}

GammaParam gamma_from_physical(const PhysicalConfig& cfg) {
  cfg.validate();
  const double lhs = 8.0 * cfg.g * cfg.omega * cfg.omega;
  const double rhs = cfg.m * std::pow(cfg.c, 4);
  if (std::abs(lhs - rhs) > 1e-12 * std::max(std::abs(lhs), std::abs(rhs))) {
    throw TuningError("gamma_from_physical: requires 8 g omega^2 = m c^4");
  }
  const double gamma = 0.5 * (1.0 + std::sqrt(1.0 + 2.0 / cfg.omega0()));
  return GammaParam::extended(gamma);
}

double omega0_of_gamma(const GammaParam& gp) {
  if (!(gp.gamma > 1.0)) {
    throw DomainError("omega0_of_gamma: requires gamma > 1");
  }
  return 1.0 / (2.0 * gp.gamma * (gp.gamma - 1.0));
}

double normalization_const(int n, const AlphaPair& ap) {
  if (n < 0) throw DomainError("normalization_const: negative index");
  const double log_c2 = -std::numbers::ln2 + std::lgamma(n + 1.0) +
                        std::lgamma(n + ap.alpha_plus + ap.alpha_minus) +
                        std::lgamma(n + ap.alpha_plus + 0.5) +
                        std::lgamma(n + ap.alpha_minus + 0.5);
  return std::exp(-0.5 * log_c2);
}

ComplexValue eigen_prefactor(const GammaParam& gp, double x) {
  require_oscillator_gamma(gp);
  if (!(x >= 0.0)) throw DomainError("eigen_prefactor: requires x >= 0");
  if (x == 0.0) return 0.0;
  const double g = gp.gamma;
  const double ln_w0 = std::log(omega0_of_gamma(gp));
  const ComplexValue ix(0.0, x);
  return std::exp(2.0 * log_gamma(g + ix) - log_gamma(ix) +
                  ComplexValue(0.0, x * ln_w0 + std::numbers::pi * g / 2.0));
}

ComplexValue eigenfunction_eval(int n, const GammaParam& gp, double x) {
  if (n < 0) throw DomainError("eigenfunction_eval: negative index");
  require_oscillator_gamma(gp);
  if (!(x >= 0.0)) throw DomainError("eigenfunction_eval: requires x >= 0");
  if (x == 0.0) return 0.0;  // hard-wall boundary condition
  const double g = gp.gamma;
  const double cn = normalization_const(n, {g, g});
  const double sn = cdhahn_poly(n, x * x, {g, g, 0.5});
  return cn * sn * eigen_prefactor(gp, x);
}

double EigenExpansion::norm_sq() const {
  double s = 0.0;
  for (const auto& c : coefficients) s += std::norm(c);
  return s;
}

ComplexValue EigenExpansion::eval(double x) const {
  if (x == 0.0) return 0.0;
  const double g = gamma.gamma;
  const ComplexValue pref = eigen_prefactor(gamma, x);
  ComplexValue acc = 0.0;
  for (std::size_t n = 0; n < coefficients.size(); ++n) {
    if (coefficients[n] == 0.0) continue;
    const double cn = normalization_const(static_cast<int>(n), {g, g});
    const double sn = cdhahn_poly(static_cast<int>(n), x * x, {g, g, 0.5});
    acc += coefficients[n] * cn * sn;
  }
  return acc * pref;
}

}  // namespace idxf
