#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace okd {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Runs the twelve acceptance criteria in order.
std::vector<CriterionResult> run_acceptance();

/// Prints one "PASS|FAIL <id> <name>: <detail>" line per criterion as it
/// completes; returns the number of failures.
int print_acceptance(std::ostream& out);

}  // namespace okd
