// Acceptance gate: every numbered criterion at its stated tolerance, one
// line per check, calibration gate first. Exit 0 only when all
// non-informational checks pass. Pass --quick for the reduced grids.
#include <cstdio>
#include <cstring>
#include <vector>

#include "boys/selftest.hpp"

int main(int argc, char** argv) {
  const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
  std::vector<boys::CheckResult> results;
  try {
    results = boys::run_acceptance(quick);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "acceptance run aborted: %s\n", e.what());
    return 1;
  }

  bool ok = true;
  for (const boys::CheckResult& r : results) {
    const char* tag = r.informational ? "INFO" : (r.pass ? "PASS" : "FAIL");
    std::printf("[%s] %-60s observed %10.3e  tol %9.3e  %s\n", tag, r.name.c_str(), r.observed,
                r.tol, r.detail.c_str());
    if (!r.pass && !r.informational) {
      ok = false;
    }
  }
  std::printf("acceptance: %s\n", ok ? "all criteria met" : "CRITERIA NOT MET");
  return ok ? 0 : 1;
}
