#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "idxf/complex_value.hpp"
#include "idxf/quadrature.hpp"
#include "idxf/report.hpp"
#include "idxf/transform.hpp"

namespace idxf {

// Deterministic shortest-round-trip formatting; two runs with the same
// inputs must produce byte-identical payloads.
std::string format_double(double v);

// Accepts "1", "-2.5", "i", "-i", "2i", "1+2i", "1.5-0.25i".
ComplexValue parse_complex(const std::string& text);

// Grid grammar:
//   "1, i, 1+2i"                 explicit list
//   "re=a:b:n,im=c:d:m"          lattice, imaginary part outer loop
//   "|z|=r" / "|z|=r:n"          circle of radius r (1 point at angle 0,
//                                or n equally spaced points)
std::vector<ComplexValue> parse_grid(const std::string& text);

// Real grid: "0.5" or "0,1,2.5" or "a:b:n" (n equally spaced points).
std::vector<double> parse_real_grid(const std::string& text);

// Index list: "3", "0,2,5", or "0..6".
std::vector<int> parse_index_list(const std::string& text);

// JSON report document for a verify run.
std::string verify_report_json(const std::string& suite,
                               const std::map<std::string, std::string>& config,
                               const std::vector<VerificationReport>& reports);

// CSV payloads. Every writer emits a '#'-prefixed metadata header.
std::string transform_csv(const TransformResult& result, bool linear_convention);
std::string eval_csv(const std::string& what,
                     const std::map<std::string, std::string>& meta,
                     const std::vector<std::string>& columns,
                     const std::vector<std::vector<std::string>>& rows);

// Sampled-function input file:
//   envelope,<exponential-rate|super-exponential>,<rate>,<degree>,<amplitude>
//   x,re,im          (one row per sample, x strictly increasing)
struct SampledFunction {
  std::vector<double> x;
  std::vector<ComplexValue> value;
  DecayEnvelope envelope;
};
SampledFunction parse_sampled_function(const std::string& text);

// Coefficient input file: one complex coefficient per line (or a single
// comma-separated line).
std::vector<ComplexValue> parse_coefficients(const std::string& text);

// Natural cubic spline interpolant through the samples, pinned to
// phi(0) = 0 below the first sample and refusing (EnvelopeError) when the
// declared envelope cannot certify the tail beyond the last sample.
HalfLineFunction sampled_to_halfline(const SampledFunction& fn, double tol);

}  // namespace idxf
