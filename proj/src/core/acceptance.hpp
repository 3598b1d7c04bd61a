// acceptance: the integration suite — one pass/fail line per criterion.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qs {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0;
  std::string detail;
};

// runs all criteria, printing one line per criterion to out
std::vector<CriterionResult> run_acceptance(std::ostream& out);

int count_failures(const std::vector<CriterionResult>& results);

}  // namespace qs
