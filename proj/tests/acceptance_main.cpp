// Acceptance gate: every pinned claim, zero tolerance, one line per criterion.

#include <iostream>

#include "carpet/repro.hpp"

int main() {
  const std::vector<carpet::CriterionResult> results = carpet::run_acceptance_suite();
  carpet::print_criterion_lines(results, std::cout);

  long claims = 0;
  long passed = 0;
  for (const carpet::CriterionResult& criterion : results) {
    for (const carpet::ClaimResult& claim : criterion.claims) {
      ++claims;
      if (claim.pass) ++passed;
    }
  }
  std::cout << "claims: " << passed << "/" << claims << " pass\n";
  return carpet::suite_passes(results) ? 0 : 1;
}
