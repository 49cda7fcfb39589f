#pragma once

#include <optional>
#include <string>
#include <vector>

#include "idxf/quadrature.hpp"
#include "idxf/report.hpp"

namespace idxf {

// Named check suites runnable from the CLI; `kAll` concatenates them.
enum class Suite { kGamma, kBessel, kHyper, kBergman, kOscillator, kTransform, kAll };

std::optional<Suite> suite_from_name(const std::string& name);
std::string suite_name(Suite s);

// Options shared by every check: an optional single gamma overriding the
// default grids, and an optional tolerance override that can only loosen
// the pinned per-check tolerance (effective = max(pinned, override)).
struct CheckOptions {
  std::optional<double> gamma;
  std::optional<double> tol_override;

  double effective_tol(double pinned) const {
    if (!tol_override) return pinned;
    return std::max(pinned, *tol_override);
  }
  std::vector<double> gammas_or(const std::vector<double>& defaults) const {
    if (gamma) return {*gamma};
    return defaults;
  }
};

// gamma suite
VerificationReport check_gamma_recurrence(const CheckOptions& opt);
VerificationReport check_gamma_reflection_modulus(const CheckOptions& opt);
VerificationReport check_generalized_degree_modulus(const CheckOptions& opt);

// bessel suite
VerificationReport check_bessel_k_half_order(const CheckOptions& opt);
VerificationReport check_bessel_i_half_order(const CheckOptions& opt);
VerificationReport check_bessel_k_evenness(const CheckOptions& opt);

// hyper suite
VerificationReport check_generating_function(const CheckOptions& opt);
VerificationReport check_cdhahn_symmetry(const CheckOptions& opt);

// bergman suite
VerificationReport check_bergman_orthonormality(const CheckOptions& opt,
                                                const QuadratureSpec& spec);
VerificationReport check_bergman_index_regression(const CheckOptions& opt,
                                                  const QuadratureSpec& spec);
VerificationReport check_kernel_closed_vs_series(const CheckOptions& opt);
VerificationReport check_reproducing_property(const CheckOptions& opt,
                                              const QuadratureSpec& spec);

// oscillator suite
VerificationReport check_oscillator_orthonormality(const CheckOptions& opt,
                                                   const QuadratureSpec& spec);
VerificationReport check_omega0_consistency(const CheckOptions& opt);

// transform suite
VerificationReport check_cs_series_vs_closed(const CheckOptions& opt);
VerificationReport check_cs_normalization(const CheckOptions& opt,
                                          const QuadratureSpec& spec);
VerificationReport check_cs_sqrt2_regression(const CheckOptions& opt,
                                             const QuadratureSpec& spec);
VerificationReport check_transform_eigenstate_to_monomial(const CheckOptions& opt,
                                                          const QuadratureSpec& spec);
VerificationReport check_norm_isometry(const CheckOptions& opt,
                                       const QuadratureSpec& spec);

// Validates that the suite is runnable at the requested gamma (throws
// ConfigError otherwise) and runs its checks.
std::vector<VerificationReport> run_suite(Suite suite, const CheckOptions& opt,
                                          const QuadratureSpec& spec);

// Static description of the numerical conventions in effect, embedded in
// every report so results stay auditable against variant formulations.
std::vector<std::pair<std::string, std::string>> convention_notes();

}  // namespace idxf
