// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  The same runners back the CLI's verify-all subcommand.

#include <cstdio>
#include <cstring>

#include "isohorn/acceptance.hpp"

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);
  bool all_passed = true;
  for (int id = 1; id <= isohorn::accept::criterion_count(); ++id) {
    if (only > 0 && id != only) continue;
    isohorn::accept::CriterionResult r = isohorn::accept::run_criterion(id);
    std::printf("criterion %2d %-36s %s  (%.1fs)  %s\n", r.id, r.name.c_str(),
                r.passed ? "PASS" : "FAIL", r.seconds, r.detail.c_str());
    std::fflush(stdout);
    all_passed = all_passed && r.passed;
  }
  return all_passed ? 0 : 1;
}
