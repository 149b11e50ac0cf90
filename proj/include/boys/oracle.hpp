#pragma once

#include "boys/types.hpp"

namespace boys {

// Brute-force F(n,z) by composite Gauss-Legendre on the defining integral:
// e^{-z t^2} t^{2n} on [0,1], or e^{z(1-t^2)} t^{2n} for the scaled form
// (overflow-safe for Re(z) < 0). Panel count starts at 64(1 + sqrt|z|/10)
// and doubles until two refinements agree within the rounding floor
// max(1e-16, 2 eps |value|, |z| eps int|f|); accumulation is compensated
// so the comparison is meaningful. Preconditions 0 <= n <= 64, |z| <= 1e4,
// and Re(z) >= -700 when unscaled (std::domain_error); non-convergence
// throws std::runtime_error.
Complex oracle_boys(int n, Complex z, bool scaled);

// (1/sqrt(pi)) int_0^{t_hi} e^{-t^2}/(t^2 + z) dt by the same composite
// scheme; the calibration target of the pole-sum residual check.
// Requires Re(z) >= 0, |z| >= r0, and t_hi equal to t_max or t_max1.
Complex oracle_tail_integral(Complex z, double t_hi);

// Gamma(j + 1/2, x) = int_x^inf t^{j-1/2} e^{-t} dt via t = x + v^2
// (removes the endpoint square-root singularity) on geometrically graded
// panels truncated at v = sqrt(60 + 10 j). Requires 0 <= j <= 8, x > 0.
double oracle_upper_incomplete_gamma(int j, double x);

}  // namespace boys
