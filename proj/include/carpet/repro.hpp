#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace carpet {

// One verified claim. Grid sweeps aggregate into a single claim carrying
// instance counts; headline numbers get one claim each.
struct ClaimResult {
  std::string id;
  std::string anchor;
  std::string provenance;  // "pinned" (verdict tables), "oracle", "identity"
  std::string expected;
  std::string computed;
  bool pass;
};

struct CriterionResult {
  int index = 0;
  std::string title;
  std::vector<ClaimResult> claims;

  bool pass() const;
};

// Runs every acceptance criterion. Tolerances are zero throughout; nothing
// is configurable at run time.
std::vector<CriterionResult> run_acceptance_suite();

bool suite_passes(const std::vector<CriterionResult>& results);

// One line per criterion (the acceptance gate output).
void print_criterion_lines(const std::vector<CriterionResult>& results, std::ostream& out);

// One line per claim plus summary counts (the verify-paper report).
void print_claim_report(const std::vector<CriterionResult>& results, std::ostream& out);

}  // namespace carpet
