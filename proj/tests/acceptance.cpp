#include <iostream>

#include "qj/acceptance.hpp"

int main() {
  int failed = 0;
  qj::run_acceptance({}, [&](const qj::CriterionResult& r) {
    std::cout << qj::format_result(r) << std::endl;
    failed += r.passed ? 0 : 1;
  });
  std::cout << (failed ? "acceptance: FAILED" : "acceptance: all criteria passed") << std::endl;
  return failed ? 1 : 0;
}
