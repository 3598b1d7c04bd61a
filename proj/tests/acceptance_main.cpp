#include <iostream>

#include "core/acceptance.hpp"

int main() {
  auto results = qs::run_acceptance(std::cout);
  int failures = qs::count_failures(results);
  std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES PRESENT") << " ("
            << results.size() - static_cast<size_t>(failures) << "/" << results.size() << ")\n";
  return failures == 0 ? 0 : 1;
}
