#include "idxf/verification.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <random>
#include <sstream>

#include "idxf/bergman.hpp"
#include "idxf/bessel.hpp"
#include "idxf/gamma.hpp"
#include "idxf/hyper.hpp"
#include "idxf/oscillator.hpp"
#include "idxf/parallel.hpp"
#include "idxf/transform.hpp"

namespace idxf {
namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

std::string fmt(ComplexValue v) {
  std::ostringstream os;
  os.precision(12);
  os << v.real() << (v.imag() < 0 ? "" : "+") << v.imag() << "i";
  return os.str();
}

double rel_err(ComplexValue got, ComplexValue expected) {
  const double scale = std::abs(expected);
  if (scale == 0.0) return std::abs(got);
  return std::abs(got - expected) / scale;
}

void observe(VerificationReport& r, double err, const std::string& inputs,
             const std::string& expected, const std::string& got) {
  r.max_abs_error = std::max(r.max_abs_error, err);
  r.record_case({inputs, expected, got, err});
  ++r.total_cases;
}

// Thread-safe observe for checks that parallelize their case grid.
class Observer {
 public:
  explicit Observer(VerificationReport& r) : r_(r) {}
  void add(double err, const std::string& inputs, const std::string& expected,
           const std::string& got) {
    std::lock_guard<std::mutex> lock(mu_);
    observe(r_, err, inputs, expected, got);
  }

 private:
  VerificationReport& r_;
  std::mutex mu_;
};

}  // namespace

std::optional<Suite> suite_from_name(const std::string& name) {
  if (name == "gamma") return Suite::kGamma;
  if (name == "bessel") return Suite::kBessel;
  if (name == "hyper") return Suite::kHyper;
  if (name == "bergman") return Suite::kBergman;
  if (name == "oscillator") return Suite::kOscillator;
  if (name == "transform") return Suite::kTransform;
  if (name == "all") return Suite::kAll;
  return std::nullopt;
}

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::kGamma: return "gamma";
    case Suite::kBessel: return "bessel";
    case Suite::kHyper: return "hyper";
    case Suite::kBergman: return "bergman";
    case Suite::kOscillator: return "oscillator";
    case Suite::kTransform: return "transform";
    case Suite::kAll: return "all";
  }
  return "?";
}

std::vector<std::pair<std::string, std::string>> convention_notes() {
  return {
      {"measure-bessel-index",
       "2*gamma-1 (forced by the moment identity; the 1/2-gamma variant fails "
       "orthonormality for gamma != 1/2 and survives only as a regression check)"},
      {"omega0-form",
       "1/(2*gamma*(gamma-1)) (inverts the coincident-root relation; the variant "
       "1/(gamma*(2*gamma-1)) is inconsistent with it)"},
      {"coherent-state-normalization",
       "sqrt(2) retained from c_0 (without it every state has norm 1/2)"},
      {"hypergeometric-argument", "-z (the generating identity fixes the sign)"},
      {"transform-linearity",
       "conjugate-linear (holomorphic output); --linear transforms conj(phi)"},
  };
}

// ---------------------------------------------------------------------------
// gamma suite

VerificationReport check_gamma_recurrence(const CheckOptions& opt) {
  VerificationReport r;
  r.check_name = "gamma/recurrence";
  r.parameters["points"] = "1000";
  std::mt19937_64 rng(0x1DEA);
  std::uniform_real_distribution<double> box(-10.0, 10.0);
  int produced = 0;
  while (produced < 1000) {
    const ComplexValue z(box(rng), box(rng));
    // Stay away from the poles so the ratio is well conditioned.
    const double nearest = std::round(z.real());
    if (nearest <= 0.5 && std::hypot(z.real() - nearest, z.imag()) < 0.1) continue;
    ++produced;
    const ComplexValue lhs = gamma_fn(z + 1.0);
    const ComplexValue rhs = z * gamma_fn(z);
    const double err = std::abs(lhs - rhs) / std::abs(lhs);
    observe(r, err, "z=" + fmt(z), fmt(lhs), fmt(rhs));
  }
  r.finalize(opt.effective_tol(1e-12));
  return r;
}

VerificationReport check_gamma_reflection_modulus(const CheckOptions& opt) {
  VerificationReport r;
  r.check_name = "gamma/reflection-modulus";
  r.parameters["x-range"] = "(0,30]";
  for (int j = 1; j <= 120; ++j) {
    const double x = 30.0 * j / 120.0;
    const double got = abs_gamma_sq(0.0, x);
    const double expected = kPi / (x * std::sinh(kPi * x));
    const double err = std::abs(got - expected) / expected;
    observe(r, err, "x=" + fmt(x), fmt(expected), fmt(got));
  }
  r.finalize(opt.effective_tol(1e-12));
  return r;
}

VerificationReport check_generalized_degree_modulus(const CheckOptions& opt) {
  VerificationReport r;
  r.check_name = "gamma/generalized-degree-modulus";
  const auto gammas = opt.gammas_or({0.5, 1.0, 1.5, 2.0, 3.0});
  for (double g : gammas) {
    for (int j = 1; j <= 24; ++j) {
      const double x = 30.0 * j / 24.0;
      const ComplexValue gd = generalized_degree(x, g);
      const double got = std::norm(gd) * kPi / (x * std::sinh(kPi * x));
      const double expected = abs_gamma_sq(g, x);
      const double err = std::abs(got - expected) / expected;
      observe(r, err, "gamma=" + fmt(g) + " x=" + fmt(x), fmt(expected), fmt(got));
    }
  }
  r.finalize(opt.effective_tol(1e-12));
  return r;
}

// ---------------------------------------------------------------------------
// bessel suite

VerificationReport check_bessel_k_half_order(const CheckOptions& opt) {
  VerificationReport r;
  r.check_name = "bessel/k-half-closed-form";
  r.parameters["rho-range"] = "[0.1,20]";
  for (int j = 0; j < 60; ++j) {
    const double rho = 0.1 + (20.0 - 0.1) * j / 59.0;
    const double got = bessel_k(0.5, rho);
    const double expected = std::sqrt(kPi / (2.0 * rho)) * std::exp(-rho);
    const double err = std::abs(got - expected) / expected;
    observe(r, err, "rho=" + fmt(rho), fmt(expected), fmt(got));
  }
  r.finalize(opt.effective_tol(1e-10));
  return r;
}

VerificationReport check_bessel_i_half_order(const CheckOptions& opt) {
  VerificationReport r;
  r.check_name = "bessel/i-half-closed-form";
  r.parameters["zeta-range"] = "[0.1,10]";
  for (int j = 0; j < 50; ++j) {
    const double zeta = 0.1 + (10.0 - 0.1) * j / 49.0;
    const double got = bessel_i(0.5, zeta).real();
    const double expected = std::sqrt(2.0 / (kPi * zeta)) * std::sinh(zeta);
    const double err = std::abs(got - expected) / expected;
    observe(r, err, "zeta=" + fmt(zeta), fmt(expected), fmt(got));
  }
  r.finalize(opt.effective_tol(1e-11));
  return r;
}

VerificationReport check_bessel_k_evenness(const CheckOptions& opt) {
  VerificationReport r;
  r.check_name = "bessel/k-evenness";
  for (double nu : {0.3, 0.7, 1.5, 2.5, 3.7, 7.2}) {
    for (double rho : {0.7, 2.0, 11.0}) {
      const double plus = bessel_k(nu, rho);
      const double minus = bessel_k(-nu, rho);
      const double err = std::abs(plus - minus) / std::abs(plus);
      observe(r, err, "nu=" + fmt(nu) + " rho=" + fmt(rho), fmt(plus), fmt(minus));
    }
  }
  r.finalize(opt.effective_tol(1e-11));
  return r;
}

// ---------------------------------------------------------------------------
// hyper suite

VerificationReport check_generating_function(const CheckOptions& opt) {
  VerificationReport r;
  r.check_name = "hyper/generating-function";
  const auto gammas = opt.gammas_or({1.5, 2.0, 2.5});
  const std::vector<ComplexValue> xis = {
      {1.0, 0.0}, {-1.0, 0.0}, {0.0, 2.0}, {0.0, -2.0}, {1.0, 0.5}, {3.0, 0.0}};
  for (double g : gammas) {
    const CDHahnParams p{g, g, 0.5};
    for (double x : {0.3, 1.0, 2.7}) {
      for (const auto& xi : xis) {
        const ComplexValue lhs = cdhahn_genfun_lhs(x, xi, p);
        // Independent route: the expansion over the polynomials themselves,
        // truncated once the terms are far below the target.
        ComplexValue rhs = 0.0;
        ComplexValue xin = 1.0;
        double denom = 1.0;  // (a+b)_n (a+c)_n n!
        int tiny = 0;
        for (int n = 0; n <= 400; ++n) {
          const ComplexValue term = cdhahn_poly(n, x * x, p) * xin / denom;
          rhs += term;
          if (std::abs(term) <= 1e-15 * std::abs(rhs)) {
            if (++tiny >= 3) break;
          } else {
            tiny = 0;
          }
          xin *= xi;
          denom *= (2.0 * g + n) * (g + 0.5 + n) * (n + 1.0);
        }
        const double err = rel_err(rhs, lhs);
        observe(r, err, "gamma=" + fmt(g) + " x=" + fmt(x) + " xi=" + fmt(xi),
                fmt(lhs), fmt(rhs));
      }
    }
  }
  r.finalize(opt.effective_tol(1e-10));
  return r;
}

VerificationReport check_cdhahn_symmetry(const CheckOptions& opt) {
  VerificationReport r;
  r.check_name = "hyper/cdhahn-parameter-symmetry";
  std::mt19937_64 rng(0x5EED);
  std::uniform_real_distribution<double> uni(0.2, 3.0);
  for (int trial = 0; trial < 40; ++trial) {
    const double a = uni(rng), b = uni(rng), c = uni(rng);
    const int n = static_cast<int>(trial % 8);
    const double xsq = uni(rng);
    const double base = cdhahn_poly(n, xsq, {a, b, c});
    for (const auto& p : std::vector<CDHahnParams>{
             {a, c, b}, {b, a, c}, {b, c, a}, {c, a, b}, {c, b, a}}) {
      const double v = cdhahn_poly(n, xsq, p);
      const double err = std::abs(v - base) / std::max(1e-30, std::abs(base));
      observe(r, err,
              "n=" + std::to_string(n) + " xsq=" + fmt(xsq) + " perm of (" + fmt(a) +
                  "," + fmt(b) + "," + fmt(c) + ")",
              fmt(base), fmt(v));
    }
  }
  r.finalize(opt.effective_tol(1e-12));
  return r;
}

// ---------------------------------------------------------------------------
// bergman suite

VerificationReport check_bergman_orthonormality(const CheckOptions& opt,
                                                const QuadratureSpec& spec) {
  VerificationReport r;
  r.check_name = "bergman/orthonormality";
  r.parameters["n-max"] = "12";
  const auto gammas = opt.gammas_or({0.5, 1.0, 1.5, 2.0, 3.0});
  struct Item {
    double g;
    int m, n;
  };
  std::vector<Item> items;
  for (double g : gammas) {
    for (int m = 0; m <= 12; ++m) {
      for (int n = m; n <= 12; ++n) items.push_back({g, m, n});
    }
  }
  Observer obs(r);
  parallel_for(items.size(), [&](std::size_t i) {
    const auto [g, m, n] = items[i];
    const GammaParam gp = GammaParam::extended(g);
    const ComplexValue ip = bergman_inner(bergman_basis_function(m, gp),
                                          bergman_basis_function(n, gp), gp, spec);
    const double expected = m == n ? 1.0 : 0.0;
    const double err = std::abs(ip - expected);
    obs.add(err,
            "gamma=" + fmt(g) + " m=" + std::to_string(m) + " n=" + std::to_string(n),
            fmt(expected), fmt(ip));
  });
  r.finalize(opt.effective_tol(1e-8));
  return r;
}

VerificationReport check_bergman_index_regression(const CheckOptions& opt,
                                                  const QuadratureSpec& spec) {
  VerificationReport r;
  r.check_name = "bergman/printed-index-regression";
  r.errata_notes.push_back(
      "measure with Bessel index 1/2-gamma: <psi_0,psi_0> lands on "
      "Gamma(gamma/2+3/4)Gamma(3gamma/2+1/4)/Gamma(2gamma) instead of 1, so the "
      "orthonormality suite fails for every gamma != 1/2");
  const auto gammas = opt.gammas_or({0.5, 1.0, 1.5, 2.0, 3.0});
  for (double g : gammas) {
    const GammaParam gp = GammaParam::extended(g);
    const BergmanFunction psi0 = bergman_basis_function(0, gp);
    const ComplexValue got =
        bergman_inner_with_index(psi0, psi0, gp, spec, 0.5 - g);
    // Moment-identity oracle for the 1/2-gamma index.
    const double expected = std::exp(std::lgamma(g / 2.0 + 0.75) +
                                     std::lgamma(1.5 * g + 0.25) -
                                     std::lgamma(2.0 * g));
    double err = std::abs(got - expected);
    const bool off_normal = std::abs(expected - 1.0) > 1e-3;
    const bool coincides = std::abs(g - 0.5) < 1e-12;
    // The regression demands the defect to be visible away from gamma=1/2.
    if (!coincides && !off_normal) err = 1.0;
    if (coincides && std::abs(got.real() - 1.0) > 1e-8) err = 1.0;
    observe(r, err, "gamma=" + fmt(g), fmt(expected), fmt(got));
  }
  r.finalize(opt.effective_tol(1e-8));
  return r;
}

VerificationReport check_kernel_closed_vs_series(const CheckOptions& opt) {
  VerificationReport r;
  r.check_name = "bergman/kernel-closed-vs-series";
  r.parameters["grid"] = "7x7 disk radius 5";
  const auto gammas = opt.gammas_or({0.5, 1.5, 3.0});
  const double radii[7] = {0.4, 1.1, 1.9, 2.7, 3.5, 4.3, 5.0};
  for (double g : gammas) {
    const GammaParam gp = GammaParam::extended(g);
    for (int i = 0; i < 7; ++i) {
      for (int j = 0; j < 7; ++j) {
        const ComplexValue z = std::polar(radii[i], 2.0 * kPi * 0.381966 * i);
        const ComplexValue w = std::polar(radii[j], 2.0 * kPi * 0.618034 * j + 0.41);
        const ComplexValue series = kernel_series(z, w, gp);
        const ComplexValue closed = kernel_closed(z, w, gp);
        const double err = rel_err(closed, series);
        observe(r, err, "gamma=" + fmt(g) + " z=" + fmt(z) + " w=" + fmt(w),
                fmt(series), fmt(closed));
      }
    }
  }
  r.finalize(opt.effective_tol(1e-10));
  return r;
}

VerificationReport check_reproducing_property(const CheckOptions& opt,
                                              const QuadratureSpec& spec) {
  VerificationReport r;
  r.check_name = "bergman/reproducing-property";
  const auto gammas = opt.gammas_or({1.0, 2.0});
  const std::vector<ComplexValue> points = {
      {0.3, 0.0}, {-0.7, 0.2}, {0.0, 1.1}, {1.2, -0.8}, {1.5, 0.0}};
  struct Item {
    double g;
    int n;
    ComplexValue w;
  };
  std::vector<Item> items;
  for (double g : gammas) {
    for (int n = 0; n <= 6; ++n) {
      for (const auto& w : points) items.push_back({g, n, w});
    }
  }
  Observer obs(r);
  parallel_for(items.size(), [&](std::size_t i) {
    const auto& [g, n, w] = items[i];
    const GammaParam gp = GammaParam::extended(g);
    const ComplexValue got = bergman_inner(bergman_basis_function(n, gp),
                                           bergman_kernel_function(w, gp), gp, spec);
    const ComplexValue expected = basis_element(n, gp, w);
    const double err = std::abs(got - expected);
    obs.add(err, "gamma=" + fmt(g) + " f=psi_" + std::to_string(n) + " w=" + fmt(w),
            fmt(expected), fmt(got));
  });
  r.finalize(opt.effective_tol(1e-8));
  return r;
}

// ---------------------------------------------------------------------------
// oscillator suite

VerificationReport check_oscillator_orthonormality(const CheckOptions& opt,
                                                   const QuadratureSpec& spec) {
  VerificationReport r;
  r.check_name = "oscillator/orthonormality";
  r.parameters["n-max"] = "8";
  const auto gammas = opt.gammas_or({1.5, 2.0, 2.5});
  struct Item {
    double g;
    int m, n;
  };
  std::vector<Item> items;
  for (double g : gammas) {
    for (int m = 0; m <= 8; ++m) {
      for (int n = m; n <= 8; ++n) items.push_back({g, m, n});
    }
  }
  Observer obs(r);
  parallel_for(items.size(), [&](std::size_t i) {
    const auto [g, m, n] = items[i];
    const GammaParam gp = GammaParam::extended(g);
    RealIntegrand f = [m = m, n = n, gp](double x) {
      return eigenfunction_eval(m, gp, x) * std::conj(eigenfunction_eval(n, gp, x));
    };
    const double degree = 2.0 * (m + n) + 4.0 * g - 1.0;
    const double probe_hi =
        ((4.0 * g - 1.0 + 2.0 * (m + n)) * std::log(4.0 * g + 20.0 + 2.0 * (m + n)) +
         40.0) /
            kPi +
        5.0;
    const DecayEnvelope env = calibrate_envelope(
        f, DecayEnvelope::Kind::ExponentialRate, kPi * 0.98, degree, probe_hi);
    const ComplexValue ip = integrate_halfline(f, env, spec);
    const double expected = m == n ? 1.0 : 0.0;
    const double err = std::abs(ip - expected);
    obs.add(err,
            "gamma=" + fmt(g) + " m=" + std::to_string(m) + " n=" + std::to_string(n),
            fmt(expected), fmt(ip));
  });
  r.finalize(opt.effective_tol(1e-8));
  return r;
}

VerificationReport check_omega0_consistency(const CheckOptions& opt) {
  VerificationReport r;
  r.check_name = "oscillator/omega0-consistency";
  r.errata_notes.push_back(
      "omega0 = 1/(2*gamma*(gamma-1)); the variant 1/(gamma*(2*gamma-1)) fails "
      "this consistency check for every gamma > 1");
  const auto gammas = opt.gammas_or({1.2, 1.5, 2.0, 2.5, 3.0, 4.0, 6.0});
  for (double g : gammas) {
    // Build a tuned configuration whose coincident-root parameter is g.
    const double w0 = 1.0 / (2.0 * g * (g - 1.0));
    PhysicalConfig cfg;
    cfg.m = 1.0;
    cfg.hbar = 1.0;
    cfg.c = 1.0;
    cfg.omega = w0;
    cfg.g = 1.0 / (8.0 * w0 * w0);  // enforces 8 g omega^2 = m c^4
    const GammaParam from_physical = gamma_from_physical(cfg);
    const double w0_back = omega0_of_gamma(from_physical);
    const double err =
        std::max(std::abs(w0_back - cfg.omega0()) / cfg.omega0(),
                 std::abs(from_physical.gamma - g) / g);
    observe(r, err, "gamma=" + fmt(g), fmt(cfg.omega0()), fmt(w0_back));
  }
  r.finalize(opt.effective_tol(1e-12));
  return r;
}

// ---------------------------------------------------------------------------
// transform suite

VerificationReport check_cs_series_vs_closed(const CheckOptions& opt) {
  VerificationReport r;
  r.check_name = "transform/cs-series-vs-closed";
  const auto gammas = opt.gammas_or({1.5, 2.0, 3.0});
  const std::vector<ComplexValue> zs = {
      {1.0, 0.0}, {0.0, 1.0}, {1.0, 2.0}, {2.0, -1.0}, {3.0, 0.0}};
  for (double g : gammas) {
    const GammaParam gp = GammaParam::extended(g);
    for (const auto& z : zs) {
      const CoherentStateLabel label{z, gp};
      const int N = cs_auto_order(label);
      for (double x : {0.3, 0.7, 1.3, 2.7}) {
        const ComplexValue s = cs_series(x, label, N);
        const ComplexValue c = cs_closed(x, label);
        const double err = rel_err(c, s);
        observe(r, err, "gamma=" + fmt(g) + " z=" + fmt(z) + " x=" + fmt(x), fmt(s),
                fmt(c));
      }
    }
  }
  r.finalize(opt.effective_tol(1e-9));
  return r;
}

namespace {

double cs_norm_integral(const CoherentStateLabel& label, const QuadratureSpec& spec) {
  const DecayEnvelope cs_env = coherent_state_envelope(label);
  DecayEnvelope env = cs_env;
  env.rate = 2.0 * cs_env.rate;
  env.poly_degree = 2.0 * cs_env.poly_degree;
  env.amplitude = cs_env.amplitude * cs_env.amplitude;
  RealIntegrand f = [label](double x) {
    return ComplexValue(std::norm(cs_closed(x, label)), 0.0);
  };
  return integrate_halfline(f, env, spec).real();
}

}  // namespace

VerificationReport check_cs_normalization(const CheckOptions& opt,
                                          const QuadratureSpec& spec) {
  VerificationReport r;
  r.check_name = "transform/cs-normalization";
  const auto gammas = opt.gammas_or({1.5, 2.0, 3.0});
  const std::vector<ComplexValue> zs = {
      {1.0, 0.0}, {0.0, 1.0}, {1.0, 2.0}, {2.0, -1.0}, {3.0, 0.0}};
  struct Item {
    double g;
    ComplexValue z;
  };
  std::vector<Item> items;
  for (double g : gammas) {
    for (const auto& z : zs) items.push_back({g, z});
  }
  Observer obs(r);
  parallel_for(items.size(), [&](std::size_t i) {
    const auto& [g, z] = items[i];
    const CoherentStateLabel label{z, GammaParam::extended(g)};
    const double got = cs_norm_integral(label, spec);
    const double err = std::abs(got - 1.0);
    obs.add(err, "gamma=" + fmt(g) + " z=" + fmt(z), "1", fmt(got));
  });
  r.finalize(opt.effective_tol(1e-6));
  return r;
}

VerificationReport check_cs_sqrt2_regression(const CheckOptions& opt,
                                             const QuadratureSpec& spec) {
  VerificationReport r;
  r.check_name = "transform/sqrt2-regression";
  r.errata_notes.push_back(
      "without the sqrt(2) carried by c_0 the closed-form coherent state has "
      "squared norm 1/2 instead of 1");
  const double g = opt.gamma.value_or(2.0);
  for (const ComplexValue z : {ComplexValue(1.0, 0.0), ComplexValue(1.0, 2.0)}) {
    const CoherentStateLabel label{z, GammaParam::extended(g)};
    // Integrate |cs/sqrt(2)|^2: the sqrt(2)-less closed form.
    const double got = 0.5 * cs_norm_integral(label, spec);
    const double err = std::abs(got - 0.5);
    observe(r, err, "gamma=" + fmt(g) + " z=" + fmt(z), "0.5", fmt(got));
  }
  r.finalize(opt.effective_tol(1e-6));
  return r;
}

VerificationReport check_transform_eigenstate_to_monomial(const CheckOptions& opt,
                                                          const QuadratureSpec& spec) {
  VerificationReport r;
  r.check_name = "transform/eigenstate-to-monomial";
  const auto gammas = opt.gammas_or({1.5, 2.0, 2.5});
  const std::vector<ComplexValue> grid = {
      {1.2, 0.0}, {1.5, 1.0}, {0.0, 2.0}, {2.0, -1.0}, {3.0, 0.0}};
  QuadratureSpec tight = spec;
  tight.tol = std::min(spec.tol, 1e-11);
  struct Item {
    double g;
    int n;
  };
  std::vector<Item> items;
  for (double g : gammas) {
    for (int n = 0; n <= 6; ++n) items.push_back({g, n});
  }
  Observer obs(r);
  parallel_for(items.size(), [&](std::size_t i) {
    const auto [g, n] = items[i];
    const GammaParam gp = GammaParam::extended(g);
    EigenExpansion basis_vec{gp, std::vector<ComplexValue>(n + 1, 0.0)};
    basis_vec.coefficients[n] = 1.0;
    HalfLineFunction phi{[n = n, gp](double x) { return eigenfunction_eval(n, gp, x); },
                         expansion_envelope(basis_vec)};
    const TransformResult res = transform_apply_sampled(phi, grid, gp, tight);
    for (const auto& [z, F] : res.values) {
      const ComplexValue expected = basis_element(n, gp, z);
      const double err = rel_err(F, expected);
      obs.add(err, "gamma=" + fmt(g) + " n=" + std::to_string(n) + " z=" + fmt(z),
              fmt(expected), fmt(F));
    }
  });
  r.finalize(opt.effective_tol(1e-6));
  return r;
}

VerificationReport check_norm_isometry(const CheckOptions& opt,
                                       const QuadratureSpec& spec) {
  VerificationReport r;
  r.check_name = "transform/norm-isometry";
  r.parameters["expansions"] = "20";
  const auto gammas = opt.gammas_or({1.5, 2.0, 2.5});
  std::mt19937_64 rng(0xA5A5);
  std::normal_distribution<double> gauss(0.0, 1.0);
  struct Item {
    EigenExpansion expansion;
  };
  std::vector<Item> items;
  for (int t = 0; t < 20; ++t) {
    const double g = gammas[t % gammas.size()];
    const int len = 2 + static_cast<int>(t % 7);  // lengths 2..8
    EigenExpansion e{GammaParam::extended(g), {}};
    e.coefficients.resize(len);
    for (auto& c : e.coefficients) c = ComplexValue(gauss(rng), gauss(rng));
    const double norm = std::sqrt(e.norm_sq());
    for (auto& c : e.coefficients) c /= norm;
    items.push_back({std::move(e)});
  }
  Observer obs(r);
  parallel_for(items.size(), [&](std::size_t i) {
    const auto& e = items[i].expansion;
    const VerificationReport one = isometry_report(e, e.gamma, spec);
    obs.add(one.max_abs_error,
            "gamma=" + fmt(e.gamma.gamma) + " len=" +
                std::to_string(e.coefficients.size()),
            one.cases.front().expected, one.cases.front().got);
  });
  r.finalize(opt.effective_tol(1e-6));
  return r;
}

// ---------------------------------------------------------------------------

std::vector<VerificationReport> run_suite(Suite suite, const CheckOptions& opt,
                                          const QuadratureSpec& spec) {
  if (opt.gamma) {
    const double g = *opt.gamma;
    if (!std::isfinite(g)) throw ConfigError("gamma must be finite");
    const bool needs_bergman = suite == Suite::kBergman || suite == Suite::kAll;
    const bool needs_oscillator = suite == Suite::kOscillator ||
                                  suite == Suite::kTransform || suite == Suite::kAll;
    if (needs_bergman && !(g >= 0.5)) {
      throw ConfigError("suite '" + suite_name(suite) + "' requires gamma >= 1/2");
    }
    if (needs_oscillator && !(g > 1.0)) {
      throw ConfigError("suite '" + suite_name(suite) + "' requires gamma > 1");
    }
    if ((suite == Suite::kGamma || suite == Suite::kHyper) && !(g > 0.0)) {
      throw ConfigError("suite '" + suite_name(suite) + "' requires gamma > 0");
    }
  }

  std::vector<VerificationReport> out;
  const auto add = [&out](VerificationReport rep) { out.push_back(std::move(rep)); };
  switch (suite) {
    case Suite::kGamma:
      add(check_gamma_recurrence(opt));
      add(check_gamma_reflection_modulus(opt));
      add(check_generalized_degree_modulus(opt));
      break;
    case Suite::kBessel:
      add(check_bessel_k_half_order(opt));
      add(check_bessel_i_half_order(opt));
      add(check_bessel_k_evenness(opt));
      break;
    case Suite::kHyper:
      add(check_generating_function(opt));
      add(check_cdhahn_symmetry(opt));
      break;
    case Suite::kBergman:
      add(check_bergman_orthonormality(opt, spec));
      add(check_bergman_index_regression(opt, spec));
      add(check_kernel_closed_vs_series(opt));
      add(check_reproducing_property(opt, spec));
      break;
    case Suite::kOscillator:
      add(check_oscillator_orthonormality(opt, spec));
      add(check_omega0_consistency(opt));
      break;
    case Suite::kTransform:
      add(check_cs_series_vs_closed(opt));
      add(check_cs_normalization(opt, spec));
      add(check_cs_sqrt2_regression(opt, spec));
      add(check_transform_eigenstate_to_monomial(opt, spec));
      add(check_norm_isometry(opt, spec));
      break;
    case Suite::kAll:
      for (Suite s : {Suite::kGamma, Suite::kBessel, Suite::kHyper, Suite::kBergman,
                      Suite::kOscillator, Suite::kTransform}) {
        auto part = run_suite(s, opt, spec);
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
      }
      break;
  }
  return out;
}

}  // namespace idxf
