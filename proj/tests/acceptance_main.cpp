// Runs the acceptance criteria and prints one line per criterion.  The exit
// status is the number of failures, capped at 1.
#include <cstdio>

#include "vacfluct/verify.hpp"

int main() {
  const vacfluct::verify::Report report = vacfluct::verify::run_all();
  int failed = 0;
  for (const auto &c : report.criteria) {
    std::printf("%-6s %s  %s (%.2fs)\n", c.id.c_str(), c.passed ? "PASS" : "FAIL",
                c.title.c_str(), c.seconds);
    std::printf("       %s\n", c.detail.c_str());
    failed += c.passed ? 0 : 1;
  }
  std::printf("%zu criteria, %d failed\n", report.criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
