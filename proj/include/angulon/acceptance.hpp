#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace angulon {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double measured = 0.0;  // worst observed deviation
  double bound = 0.0;     // admissible bound for that deviation
  std::string detail;     // one-line context, empty when unremarkable
};

// Runs the verification suite: every numbered claim the library makes about
// itself, each checked at its stated tolerance. only_id = 0 runs all of
// them; otherwise just the matching criterion.
std::vector<CriterionResult> run_acceptance(int only_id = 0);

// One line per criterion: "[ k] PASS|FAIL name: measured ... (bound ...)".
void print_report(const std::vector<CriterionResult>& results,
                  std::ostream& out);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace angulon
