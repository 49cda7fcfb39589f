#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace idxf {

// Result of one named numerical check. `pass` is defined as
// max_abs_error <= tolerance; `cases` holds the worst observed cases
// (never empty for an executed check).
struct VerificationReport {
  struct Case {
    std::string inputs;
    std::string expected;
    std::string got;
    double error = 0.0;
  };

  std::string check_name;
  std::map<std::string, std::string> parameters;
  double max_abs_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::vector<Case> cases;
  std::vector<std::string> errata_notes;
  std::size_t total_cases = 0;

  void finalize(double tol) {
    tolerance = tol;
    pass = max_abs_error <= tol;
  }

  // Keeps only the largest-error cases so reports stay small.
  void record_case(Case c, std::size_t keep = 8) {
    cases.push_back(std::move(c));
    std::stable_sort(cases.begin(), cases.end(),
                     [](const Case& a, const Case& b) { return a.error > b.error; });
    if (cases.size() > keep) cases.resize(keep);
  }
};

}  // namespace idxf
