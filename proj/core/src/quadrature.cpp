#include "idxf/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>

#include "idxf/errors.hpp"

namespace idxf {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxPointsPerPanel = 512;
constexpr double kEnvelopeSlack = 1.0 + 1e-9;

void validate(const QuadratureSpec& spec) {
  if (spec.points_per_panel < 4) {
    throw DomainError("quadrature: points_per_panel must be >= 4");
  }
  if (!(spec.panel_growth >= 1.0)) {
    throw DomainError("quadrature: panel_growth must be >= 1");
  }
  if (!(spec.cutoff > 0.0)) throw DomainError("quadrature: cutoff must be > 0");
  if (!(spec.tol > 0.0)) throw DomainError("quadrature: tol must be > 0");
}

// Ascending panel boundaries on (0, X]: geometric growth from X*1e-7 with
// the outer width capped so wide panels never starve the Gauss rule.
std::vector<double> panel_boundaries(double X, double growth) {
  std::vector<double> b;
  b.push_back(0.0);
  const double lo = X * 1e-7;
  const double wcap = std::max(X / 16.0, lo * 10.0);
  const double g = std::max(growth, 1.0 + 1e-9);
  double x = lo;
  b.push_back(x);
  while (x < X) {
    const double w = std::min(x * (g - 1.0), wcap);
    x = std::min(X, x + w);
    b.push_back(x);
  }
  return b;
}

// Smallest cutoff at which the envelope tail drops below budget.
double cutoff_for_tail(const DecayEnvelope& env, double budget, double start) {
  double X = std::max(start, 1.0);
  for (int i = 0; i < 400; ++i) {
    const double t = env.tail_bound(X);
    if (t <= budget) return X;
    X *= 1.25;
  }
  throw EnvelopeError("quadrature: envelope tail cannot meet the tolerance budget");
}

struct Accumulator {
  ComplexValue sum = 0.0;
  ComplexValue comp = 0.0;
  void add(ComplexValue v) {
    const ComplexValue y = v - comp;
    const ComplexValue t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

double DecayEnvelope::value(double x) const {
  const double poly = std::pow(1.0 + x, poly_degree);
  const double decay = kind == Kind::ExponentialRate ? std::exp(-rate * x)
                                                     : std::exp(-rate * x * x);
  return amplitude * poly * decay;
}

double DecayEnvelope::tail_bound(double X) const {
  if (!(rate > 0.0) || poly_degree < 0.0 || !(amplitude > 0.0)) {
    throw DomainError("DecayEnvelope: invalid parameters");
  }
  if (kind == Kind::ExponentialRate) {
    // Beyond rate*X >= 2(d+1) the log-derivative is <= -rate/2, so the
    // tail is dominated by a geometric integral.
    if (rate * X < 2.0 * (poly_degree + 1.0)) {
      return std::numeric_limits<double>::infinity();
    }
    return value(X) * 2.0 / rate;
  }
  if (rate * X * X < poly_degree + 1.0) {
    return std::numeric_limits<double>::infinity();
  }
  return value(X) / (rate * X);
}

std::pair<std::vector<double>, std::vector<double>> gauss_legendre_rule(int n) {
  if (n < 2 || n > kMaxPointsPerPanel) {
    throw RangeError("gauss_legendre_rule: n outside [2, 512]");
  }
  static std::mutex cache_mutex;
  static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }

  std::vector<double> x(n), w(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Newton on P_n from the Chebyshev-like initial guess.
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = z;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / pp;
      z -= dz;
      if (std::abs(dz) <= 1e-15 * std::max(1.0, std::abs(z))) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    w[n - 1 - i] = w[i];
  }
  if (n % 2 == 1) x[n / 2] = 0.0;

  std::lock_guard<std::mutex> lock(cache_mutex);
  return cache.emplace(n, std::make_pair(std::move(x), std::move(w))).first->second;
}

ComplexValue integrate_halfline(const RealIntegrand& f, const DecayEnvelope& env,
                                const QuadratureSpec& spec) {
  validate(spec);
  const double X = cutoff_for_tail(env, spec.tol / 10.0, spec.cutoff);
  const auto panels = panel_boundaries(X, spec.panel_growth);
  const double tol_eff = std::max(spec.tol, 5e-14);

  ComplexValue prev = 0.0;
  bool have_prev = false;
  for (int ppp = spec.points_per_panel; ppp <= kMaxPointsPerPanel; ppp *= 2) {
    const auto& [nodes, weights] = gauss_legendre_rule(ppp);
    Accumulator acc;
    for (std::size_t j = 0; j + 1 < panels.size(); ++j) {
      const double a = panels[j], b = panels[j + 1];
      const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
      for (int i = 0; i < ppp; ++i) {
        const double xx = mid + half * nodes[i];
        const ComplexValue fx = f(xx);
        if (!is_finite(fx)) {
          throw QuadratureFailure("integrate_halfline: non-finite integrand value");
        }
        if (std::abs(fx) > env.value(xx) * kEnvelopeSlack + 1e-300) {
          throw EnvelopeError("integrate_halfline: integrand above its envelope");
        }
        acc.add(half * weights[i] * fx);
      }
    }
    if (have_prev &&
        std::abs(acc.sum - prev) <= tol_eff * std::max(1.0, std::abs(acc.sum))) {
      return acc.sum;
    }
    prev = acc.sum;
    have_prev = true;
  }
  throw QuadratureFailure("integrate_halfline: refinement limit reached");
}

ComplexValue integrate_disk_polar(const PolarIntegrand& g, double rho_max,
                                  const std::optional<RadialTail>& tail,
                                  const QuadratureSpec& spec) {
  validate(spec);
  if (!(rho_max > 0.0)) throw DomainError("integrate_disk_polar: rho_max must be > 0");
  double R = rho_max;
  if (tail) {
    R = cutoff_for_tail(tail->env, spec.tol / 10.0, R);
  }
  const auto panels = panel_boundaries(R, spec.panel_growth);
  const double tol_eff = std::max(spec.tol, 5e-14);

  ComplexValue prev = 0.0;
  bool have_prev = false;
  int ntheta = 32;
  for (int ppp = spec.points_per_panel; ppp <= kMaxPointsPerPanel;
       ppp *= 2, ntheta *= 2) {
    const auto& [nodes, weights] = gauss_legendre_rule(ppp);
    const double dtheta = 2.0 * kPi / ntheta;
    Accumulator acc;
    for (std::size_t j = 0; j + 1 < panels.size(); ++j) {
      const double a = panels[j], b = panels[j + 1];
      const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
      for (int i = 0; i < ppp; ++i) {
        const double rho = mid + half * nodes[i];
        Accumulator ring;
        double ring_max = 0.0;
        for (int k = 0; k < ntheta; ++k) {
          const ComplexValue gv = g(rho, k * dtheta);
          if (!is_finite(gv)) {
            throw QuadratureFailure("integrate_disk_polar: non-finite integrand value");
          }
          ring_max = std::max(ring_max, std::abs(gv));
          ring.add(gv);
        }
        if (tail && rho >= tail->valid_from &&
            ring_max * rho > tail->env.value(rho) * kEnvelopeSlack + 1e-300) {
          throw EnvelopeError("integrate_disk_polar: integrand above its envelope");
        }
        acc.add(half * weights[i] * rho * dtheta * ring.sum);
      }
    }
    if (have_prev &&
        std::abs(acc.sum - prev) <= tol_eff * std::max(1.0, std::abs(acc.sum))) {
      return acc.sum;
    }
    prev = acc.sum;
    have_prev = true;
  }
  throw QuadratureFailure("integrate_disk_polar: refinement limit reached");
}

DecayEnvelope calibrate_envelope(const RealIntegrand& f, DecayEnvelope::Kind kind,
                                 double rate, double poly_degree, double probe_hi,
                                 int probe_points, double safety) {
  if (!(probe_hi > 0.0)) throw DomainError("calibrate_envelope: probe_hi must be > 0");
  DecayEnvelope env{kind, rate, poly_degree, 1.0};
  double amp = 1e-300;
  // Log-spaced probes resolve behavior near 0, linear probes the bulk.
  for (int i = 0; i < probe_points; ++i) {
    const double u = (i + 0.5) / probe_points;
    const double x_log = probe_hi * std::pow(1e-6, 1.0 - u);
    const double x_lin = probe_hi * u;
    for (double x : {x_log, x_lin}) {
      const double shape = env.value(x);
      if (shape > 0.0) amp = std::max(amp, std::abs(f(x)) / shape);
    }
  }
  env.amplitude = amp * safety;
  return env;
}

}  // namespace idxf
