// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion. Exit status 0 only when all pass.
#include <cstdio>

#include "mvsf/selftest.hpp"

int main() {
  auto results = mvsf::runAcceptance([](const mvsf::CriterionResult& r) {
    std::printf("[%s] criterion %d: %s -- %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.detail.c_str());
    std::fflush(stdout);
  });
  bool all = true;
  for (auto& r : results) all = all && r.pass;
  std::printf("%s\n", all ? "acceptance: all criteria passed" : "acceptance: FAILURES present");
  return all ? 0 : 1;
}
