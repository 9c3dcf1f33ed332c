#pragma once

#include <string>
#include <vector>

namespace isohorn::accept {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

// Runs one acceptance criterion (1..10).
CriterionResult run_criterion(int id);

std::vector<CriterionResult> run_all();

int criterion_count();

}  // namespace isohorn::accept
