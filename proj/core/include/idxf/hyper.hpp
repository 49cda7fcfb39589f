#pragma once

#include <vector>

#include "idxf/complex_value.hpp"

namespace idxf {

// Generalized hypergeometric series pFq(a; b; z), summed forward with
// compensated summation. Terminates when a numerator parameter is an
// exact nonpositive integer; otherwise requires p <= q (entire) or
// p = q+1 with |z| < 1.
struct HyperSeriesSpec {
  std::vector<ComplexValue> numerator;
  std::vector<ComplexValue> denominator;
  ComplexValue argument = 0.0;
  double tol = 1e-14;
  int max_terms = 10000;
};

ComplexValue pfq_series(const HyperSeriesSpec& spec);

// Continuous dual Hahn parameter triple. Pairwise sums involving `a`
// must be positive so the denominator Pochhammers never vanish.
struct CDHahnParams {
  double a;
  double b;
  double c;
};

// S_n(x^2; a, b, c) = (a+b)_n (a+c)_n 3F2(-n, a+ix, a-ix; a+b, a+c; 1),
// evaluated by the terminating sum. The result is real; the tiny
// imaginary residue of the complex summation is checked and discarded.
double cdhahn_poly(int n, double xsq, const CDHahnParams& p);

// Left side of the generating identity:
//   e^xi 2F2(a+ix, a-ix; a+b, a+c; -xi)
//     = sum_n S_n(x^2; a, b, c) / ((a+b)_n (a+c)_n) xi^n / n!
ComplexValue cdhahn_genfun_lhs(double x, ComplexValue xi, const CDHahnParams& p,
                               double tol = 1e-14);

}  // namespace idxf
