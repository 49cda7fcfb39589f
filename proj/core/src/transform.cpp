#include "idxf/transform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "idxf/gamma.hpp"
#include "idxf/hyper.hpp"
#include "idxf/parallel.hpp"

namespace idxf {
namespace {

constexpr double kPi = std::numbers::pi;

double kernel_diag(const CoherentStateLabel& label) {
  // Diagonal values go through the closed form; they normalize every
  // coherent state and must not depend on a series cutoff.
  const double k = kernel_closed(label.z, label.z, label.gamma).real();
  if (!(k >= 1.0 - 1e-12)) {
    throw Error("coherent state: kernel diagonal below 1");
  }
  return k;
}

// log of |z|^n / sqrt((2g)_n n!) relative coefficient scale.
double log_coeff(double log_abs_z, double two_g, int n) {
  return n * log_abs_z -
         0.5 * (std::lgamma(n + 1.0) + std::lgamma(two_g + n) - std::lgamma(two_g));
}

}  // namespace

void CoherentStateLabel::validate() const {
  require_finite(z, "CoherentStateLabel");
  require_oscillator_gamma(gamma);
  if (std::abs(z) > kCoherentStateBox) {
    throw RangeError("CoherentStateLabel: |z| beyond validated box");
  }
}

int cs_auto_order(const CoherentStateLabel& label) {
  label.validate();
  const double r = std::abs(label.z);
  if (r == 0.0) return 1;
  const double target =
      std::log(1e-13) + 0.5 * std::log(kernel_diag(label));
  const double log_r = std::log(r);
  const double two_g = 2.0 * label.gamma.gamma;
  for (int n = 1; n <= 400; ++n) {
    if (log_coeff(log_r, two_g, n + 1) < target) return n;
  }
  return 400;
}

ComplexValue cs_series(double x, const CoherentStateLabel& label, int N) {
  label.validate();
  if (N < 1) throw DomainError("cs_series: requires N >= 1");
  if (!(x >= 0.0)) throw DomainError("cs_series: requires x >= 0");
  if (x == 0.0) return 0.0;

  const double g = label.gamma.gamma;
  const ComplexValue pref = eigen_prefactor(label.gamma, x);
  const double xsq = x * x;
  const CDHahnParams p{g, g, 0.5};

  ComplexValue acc = 0.0;
  ComplexValue zn = 1.0;
  double fact = 1.0;  // n! (2g)_n running product
  for (int n = 0; n <= N; ++n) {
    const double cn = normalization_const(n, {g, g});
    const double sn = cdhahn_poly(n, xsq, p);
    acc += zn / std::sqrt(fact) * cn * sn;
    zn *= label.z;
    fact *= (n + 1.0) * (2.0 * g + n);
  }
  return acc * pref / std::sqrt(kernel_diag(label));
}

ComplexValue cs_closed(double x, const CoherentStateLabel& label) {
  label.validate();
  if (!(x >= 0.0)) throw DomainError("cs_closed: requires x >= 0");
  if (x == 0.0) return 0.0;  // the 1/Gamma(ix) zero

  const double g = label.gamma.gamma;
  HyperSeriesSpec f22;
  f22.numerator = {ComplexValue(g, x), ComplexValue(g, -x)};
  f22.denominator = {ComplexValue(2.0 * g, 0.0), ComplexValue(g + 0.5, 0.0)};
  f22.argument = -label.z;
  const ComplexValue hyper = pfq_series(f22);

  // c_0 = sqrt(2) / (sqrt(Gamma(2g)) Gamma(g+1/2)) carries the sqrt(2).
  const double c0 = normalization_const(0, {g, g});
  return c0 * eigen_prefactor(label.gamma, x) * std::exp(label.z) * hyper /
         std::sqrt(kernel_diag(label));
}

DecayEnvelope coherent_state_envelope(const CoherentStateLabel& label) {
  label.validate();
  const double g = label.gamma.gamma;
  const double r = std::abs(label.z);
  // |<x|z;g>| decays like x^(2g-1/2) e^{-pi x/2} times a subexponential
  // hypergeometric factor bounded by exp(3 |z|^(1/3) x^(2/3)); beyond
  // x0 that factor is majorized by e^{(3 |z|^(1/3) / x0^(1/3)) x}.
  const double x0 = std::max(40.0, 8.0 * r);
  const double slack = 3.0 * std::cbrt(r) / std::cbrt(x0);
  const double rate = std::max(0.25, kPi / 2.0 - slack);
  const CoherentStateLabel label_copy = label;
  RealIntegrand probe = [label_copy](double x) { return cs_closed(x, label_copy); };
  return calibrate_envelope(probe, DecayEnvelope::Kind::ExponentialRate, rate,
                            2.0 * g + 2.0, x0);
}

DecayEnvelope expansion_envelope(const EigenExpansion& expansion) {
  require_oscillator_gamma(expansion.gamma);
  const double g = expansion.gamma.gamma;
  const double nmax =
      expansion.coefficients.empty()
          ? 0.0
          : static_cast<double>(expansion.coefficients.size() - 1);
  const double degree = 2.0 * nmax + 2.0 * g;
  const double probe_hi =
      ((4.0 * g - 1.0 + 4.0 * nmax) * std::log(4.0 * g + 20.0 + 4.0 * nmax) + 40.0) /
          kPi +
      5.0;
  const EigenExpansion copy = expansion;
  RealIntegrand probe = [copy](double x) { return copy.eval(x); };
  return calibrate_envelope(probe, DecayEnvelope::Kind::ExponentialRate,
                            kPi / 2.0 * 0.98, degree, probe_hi);
}

TransformResult transform_apply_sampled(const HalfLineFunction& phi,
                                        const std::vector<ComplexValue>& grid,
                                        const GammaParam& gp,
                                        const QuadratureSpec& spec) {
  require_oscillator_gamma(gp);
  if (!phi.eval) throw DomainError("transform_apply_sampled: empty evaluator");

  TransformResult out;
  out.gamma = gp;
  out.input_descriptor = "sampled";
  out.values.resize(grid.size());

  parallel_for(grid.size(), [&](std::size_t i) {
    const CoherentStateLabel label{grid[i], gp};
    const DecayEnvelope cs_env = coherent_state_envelope(label);
    DecayEnvelope env;
    env.kind = DecayEnvelope::Kind::ExponentialRate;
    env.rate = cs_env.rate + phi.envelope.rate *
                                 (phi.envelope.kind ==
                                          DecayEnvelope::Kind::ExponentialRate
                                      ? 1.0
                                      : 0.0);
    env.poly_degree = cs_env.poly_degree + phi.envelope.poly_degree;
    env.amplitude = cs_env.amplitude * phi.envelope.amplitude;

    const auto phi_eval = phi.eval;
    RealIntegrand f = [label, phi_eval](double x) {
      return cs_closed(x, label) * std::conj(phi_eval(x));
    };
    const ComplexValue integral = integrate_halfline(f, env, spec);
    out.values[i] = {grid[i], std::sqrt(kernel_diag(label)) * integral};
  });
  return out;
}

TransformResult transform_apply_coeffs(const EigenExpansion& expansion,
                                       const std::vector<ComplexValue>& grid) {
  require_oscillator_gamma(expansion.gamma);
  TransformResult out;
  out.gamma = expansion.gamma;
  out.input_descriptor = "coefficients";
  out.values.reserve(grid.size());
  for (const auto& z : grid) {
    ComplexValue acc = 0.0;
    for (std::size_t n = 0; n < expansion.coefficients.size(); ++n) {
      if (expansion.coefficients[n] == 0.0) continue;
      acc += std::conj(expansion.coefficients[n]) *
             basis_element(static_cast<int>(n), expansion.gamma, z);
    }
    out.values.emplace_back(z, acc);
  }
  return out;
}

VerificationReport isometry_report(const EigenExpansion& expansion,
                                   const GammaParam& gp, const QuadratureSpec& spec,
                                   double tol) {
  require_oscillator_gamma(gp);
  VerificationReport report;
  report.check_name = "transform/norm-isometry";
  report.parameters["gamma"] = std::to_string(gp.gamma);
  report.parameters["coefficients"] = std::to_string(expansion.coefficients.size());

  double norm_line = 0.0;
  const bool zero = expansion.norm_sq() == 0.0;
  if (!zero) {
    const DecayEnvelope env = expansion_envelope(expansion);
    const EigenExpansion copy = expansion;
    RealIntegrand f = [copy](double x) {
      const ComplexValue v = copy.eval(x);
      return ComplexValue(std::norm(v), 0.0);
    };
    norm_line = integrate_halfline(f, env, spec).real();
  }

  double norm_bergman = 0.0;
  if (!zero) {
    std::vector<ComplexValue> image(expansion.coefficients.size());
    for (std::size_t n = 0; n < image.size(); ++n) {
      image[n] = std::conj(expansion.coefficients[n]);
    }
    const BergmanFunction F = bergman_polynomial_function(image, gp);
    norm_bergman = bergman_inner(F, F, gp, spec).real();
  }

  const double gap = std::abs(norm_bergman - norm_line);
  report.max_abs_error = gap;
  std::ostringstream inputs;
  inputs << "gamma=" << gp.gamma << " len=" << expansion.coefficients.size();
  std::ostringstream exp_s, got_s;
  exp_s << norm_line;
  got_s << norm_bergman;
  report.record_case({inputs.str(), exp_s.str(), got_s.str(), gap});
  report.total_cases = 1;
  report.finalize(tol);
  return report;
}

}  // namespace idxf
