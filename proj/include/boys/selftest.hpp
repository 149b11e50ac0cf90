#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace boys {

struct CheckResult {
  std::string name;
  double observed = 0.0;  // max error seen (or the reported figure)
  double tol = 0.0;
  bool pass = false;
  bool informational = false;  // reported, never failing
  std::string detail;
};

// The numbered acceptance checks, calibration gate first. quick shrinks
// the oracle grids to keep the run under a few seconds.
std::vector<CheckResult> run_acceptance(bool quick);

// Acceptance checks plus the per-module invariant suites.
std::vector<CheckResult> run_selftest(bool quick);

// Microbenchmark: medians of ns/eval over >= 5 repetitions after warm-up,
// randomized arguments, checksum to defeat dead-code elimination.
struct BenchReport {
  double ns_exp = 0.0;       // complex exponential baseline
  double ns_f0 = 0.0;        // single F(0,z), pole-sum region
  double ns_vec = 0.0;       // full complex vector, n_max = 12
  double ns_vec_real = 0.0;  // full real vector, n_max = 12
  double ratio = 0.0;        // ns_f0 / ns_exp
  double checksum = 0.0;
};

BenchReport run_bench(std::uint64_t iters, std::uint64_t seed);

}  // namespace boys
