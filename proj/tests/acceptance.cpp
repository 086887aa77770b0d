// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
#include <cstdio>

#include "mellinop/verify.hpp"

int main() {
  using namespace mellinop;
  bool all = true;
  for (int id = 1; id <= 9; ++id) {
    const CriterionReport r = run_criterion(id, default_seed, true);
    all = all && r.pass();
    std::printf("[%s] criterion %d: %s\n", r.pass() ? "PASS" : "FAIL", id, r.title.c_str());
    for (const auto& c : r.checks)
      std::printf("    %-4s %-52s measured %.3e  limit %.3e  (%s)\n", c.pass ? "ok" : "FAIL", c.name.c_str(),
                  c.measured, c.threshold, c.detail.c_str());
  }
  std::printf("%s\n", all ? "acceptance: all criteria passed" : "acceptance: FAILED");
  return all ? 0 : 1;
}
