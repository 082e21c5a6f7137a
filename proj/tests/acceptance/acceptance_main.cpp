// One line per acceptance criterion; exit status is non-zero if any fails.

#include <iostream>

#include "verify.hpp"

int main() {
  const lkrep::verify::Options opt;
  int failed = 0;
  for (const auto& criterion : lkrep::verify::criteria()) {
    const auto outcome = criterion(opt);
    std::cout << lkrep::verify::format(outcome, true) << std::endl;
    failed += outcome.pass ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
