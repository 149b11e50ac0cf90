#pragma once

#include <vector>

#include "boys/tables.hpp"

namespace boys {

// F(0,x) for real x >= 0: the shared 10-term Taylor below r0, otherwise
// sqrt(pi) erf(sqrt(x))/(2 sqrt(x)) using the platform error function.
// The first call cross-checks std::erf against the oracle at five points
// and throws std::runtime_error if the math library is off by > 1e-14.
// Throws std::domain_error for x < 0.
double f0_real(double x);

// Real-arithmetic F(0..n_max, x) for x >= 0: erf-seeded forward recursion
// when x >= z*(n_max) (one exp, one divide), exponential-sum seed with
// backward recursion below. Throws std::domain_error for x < 0.
std::vector<double> boys_all_real(double x, int n_max, const ExpSumTable& table);
std::vector<double> boys_all_real(double x, int n_max = 12);

}  // namespace boys
