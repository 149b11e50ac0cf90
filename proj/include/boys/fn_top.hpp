#pragma once

#include "boys/tables.hpp"
#include "boys/types.hpp"

namespace boys {

// F(n_max, z) for Re(z) >= 0:
//   (1/2) sum_m w_m e^{eta_m} q(z + eta_m),
// with the q guard active near z = -eta_m. One e^{-z} per call; the
// per-term exponentials live in the table. Compensated summation keeps
// the 1e-25-magnitude weights from being lost behind O(1) terms.
// Throws std::domain_error for Re(z) < 0.
Complex fn_top_nonneg(Complex z, const ExpSumTable& table = expsum_table());

// e^z F(n_max, z) for Re(z) < 0:
//   (1/2) sum_m w_m (e^{z + eta_m} - 1)/(z + eta_m),
// guarded the same way ((e^{xi} - 1)/xi = q(-xi)). One e^z per call.
// Throws std::domain_error for Re(z) >= 0.
Complex fn_top_neg_scaled(Complex z, const ExpSumTable& table = expsum_table());

// Same value as Re(fn_top_nonneg(x)) for real x >= 0, but with the five
// conjugate pairs folded into 2 Re(term) and the three real rows kept in
// real arithmetic. Agreement with the complex path is within 1e-15, not
// bit-level. Throws std::domain_error for x < 0.
double fn_top_real(double x, const ExpSumTable& table = expsum_table());

}  // namespace boys
