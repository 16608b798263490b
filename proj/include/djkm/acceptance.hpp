#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace djkm {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double budget_seconds = 0.0;  // 0 when the criterion has no runtime budget
  bool within_budget() const { return budget_seconds <= 0.0 || seconds < budget_seconds; }
};

inline constexpr int kCriterionCount = 11;

/// Runs one criterion, 1 <= id <= kCriterionCount. Exceptions from the
/// underlying checks are caught and reported as failures.
CriterionResult run_criterion(int id, unsigned threads = 1);
std::vector<CriterionResult> run_acceptance(unsigned threads = 1);

/// "PASS  1 family tables: ..." with an optional timing suffix.
std::string format_criterion(const CriterionResult& r, bool with_timing = true);
nlohmann::json criterion_json(const CriterionResult& r, bool with_timing = true);

}  // namespace djkm
