#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hpt/triangle.hpp"

namespace hpt {

// The nine end-to-end checks of the library, shared by `hpt verify` and the
// acceptance test binary.

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // one line: what was covered, or the first failure
};

struct CriterionInfo {
  int id;
  std::string_view name;
};

/// Ids 1..9 in order.
std::vector<CriterionInfo> criteria();

/// Runs one criterion; unknown ids throw std::out_of_range. Exceptions from
/// the library are caught and reported as a failure.
CheckResult run_criterion(int id, std::size_t cell_budget = kDefaultCellBudget);

std::vector<CheckResult> run_criteria(const std::vector<int>& ids,
                                      std::size_t cell_budget = kDefaultCellBudget);

}  // namespace hpt
