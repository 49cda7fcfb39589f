#include "idxf/hyper.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <optional>

#include "idxf/gamma.hpp"

namespace idxf {
namespace {

// Smallest termination order among exact nonpositive-integer numerator
// parameters, if any: the term of that index acquires a zero factor.
std::optional<long> termination_order(const std::vector<ComplexValue>& num) {
  std::optional<long> order;
  for (const auto& a : num) {
    if (exact_nonpositive_integer(a)) {
      const long m = static_cast<long>(-a.real());
      if (!order || m < *order) order = m;
    }
  }
  return order;
}

void validate(const HyperSeriesSpec& spec, const std::optional<long>& term) {
  if (!(spec.tol > 0.0)) throw DomainError("pfq_series: tol must be positive");
  if (spec.max_terms < 1) throw DomainError("pfq_series: max_terms must be >= 1");
  require_finite(spec.argument, "pfq_series");
  for (const auto& a : spec.numerator) require_finite(a, "pfq_series");
  for (const auto& b : spec.denominator) require_finite(b, "pfq_series");

  const std::size_t p = spec.numerator.size();
  const std::size_t q = spec.denominator.size();
  if (p > q + 1) throw DomainError("pfq_series: p must be <= q + 1");
  if (p == q + 1 && !term && std::abs(spec.argument) >= 1.0) {
    throw DomainError("pfq_series: p = q+1 series diverges for |z| >= 1");
  }
  // A denominator Pochhammer vanishing before the series terminates is a
  // hard pole of the sum.
  for (const auto& b : spec.denominator) {
    if (near_nonpositive_integer(b)) {
      const long pole_at = static_cast<long>(-std::round(b.real()));
      if (!term || *term > pole_at) {
        throw DenominatorPole("pfq_series: denominator parameter hits a pole");
      }
    }
  }
}

}  // namespace

ComplexValue pfq_series(const HyperSeriesSpec& spec) {
  const auto term_order = termination_order(spec.numerator);
  validate(spec, term_order);

  ComplexValue sum = 1.0;  // n = 0 term
  ComplexValue comp = 0.0; // Kahan compensation
  ComplexValue term = 1.0;
  int small_run = 0;

  for (long n = 0; n < spec.max_terms; ++n) {
    if (term_order && n >= *term_order) return sum;

    ComplexValue ratio = spec.argument / static_cast<double>(n + 1);
    for (const auto& a : spec.numerator) ratio *= a + static_cast<double>(n);
    for (const auto& b : spec.denominator) ratio /= b + static_cast<double>(n);
    term *= ratio;
    if (!is_finite(term)) {
      throw OverflowError("pfq_series: non-finite term encountered");
    }

    const ComplexValue y = term - comp;
    const ComplexValue t = sum + y;
    comp = (t - sum) - y;
    sum = t;

    // 2F2-style terms are non-monotonic for complex parameters, so a
    // single small term is not evidence of convergence.
    if (std::abs(term) <= spec.tol * std::abs(sum)) {
      if (++small_run >= 3) return sum;
    } else {
      small_run = 0;
    }
  }
  throw NoConvergence("pfq_series: term budget exhausted");
}

double cdhahn_poly(int n, double xsq, const CDHahnParams& p) {
  if (n < 0) throw DomainError("cdhahn_poly: negative degree");
  if (!(xsq >= 0.0)) throw DomainError("cdhahn_poly: requires xsq >= 0");
  if (!(p.a + p.b > 0.0) || !(p.a + p.c > 0.0)) {
    throw DomainError("cdhahn_poly: requires a+b > 0 and a+c > 0");
  }
  // Terminating 3F2 sum, forward with compensated summation. The
  // conjugate numerator pair contributes (a+ix)_k (a-ix)_k, which is the
  // real product of (a+j)^2 + x^2 factors, so every term is real and the
  // result carries no imaginary residue at all.
  double sum = 1.0, comp = 0.0, term = 1.0;
  for (int k = 0; k < n; ++k) {
    const double quad = (p.a + k) * (p.a + k) + xsq;
    term *= (static_cast<double>(k) - n) * quad /
            ((p.a + p.b + k) * (p.a + p.c + k) * (k + 1.0));
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  double prefactor = 1.0;  // (a+b)_n (a+c)_n
  for (int k = 0; k < n; ++k) prefactor *= (p.a + p.b + k) * (p.a + p.c + k);
  return prefactor * sum;
}

ComplexValue cdhahn_genfun_lhs(double x, ComplexValue xi, const CDHahnParams& p,
                               double tol) {
  HyperSeriesSpec spec;
  spec.numerator = {ComplexValue(p.a, x), ComplexValue(p.a, -x)};
  spec.denominator = {ComplexValue(p.a + p.b, 0.0), ComplexValue(p.a + p.c, 0.0)};
  spec.argument = -xi;
  spec.tol = tol;
  return std::exp(xi) * pfq_series(spec);
}

}  // namespace idxf
