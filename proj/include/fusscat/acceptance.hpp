#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace fusscat {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  double seconds = 0.0;
  double budget_seconds = 0.0;
  std::string detail;  // first mismatch, or a short summary on success
};

inline constexpr int kCriterionCount = 11;

/// Runs one end-to-end criterion (1..kCriterionCount). A criterion that
/// finishes over its time budget fails.
CriterionResult run_criterion(int id);

/// Runs every criterion in order, reporting each result as it completes.
std::vector<CriterionResult> run_all_criteria(
    const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS [ 1] title (0.01s / 1s) detail"
std::string format_result(const CriterionResult& result);

/// Canonical-module generator lists of the two reference staircases, as
/// transcribed TeX monomials. (n, t, p) must be (3, 1, 3) or (3, 2, 3).
std::string_view reference_generator_list(int n, int t, int p);

}  // namespace fusscat
