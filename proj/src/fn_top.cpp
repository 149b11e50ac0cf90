#include "boys/fn_top.hpp"

#include <cmath>
#include <stdexcept>

#include "boys/constants.hpp"
#include "boys/detail/compensated.hpp"
#include "boys/f0.hpp"

namespace boys {

namespace {

// Real-argument q(xi) = (1 - e^{-xi}) / xi with the same guarded Taylor
// switch as the complex version; keeps the real path in real arithmetic.
double q_real(double xi) {
  if (std::abs(xi) > region_params().guard_radius) {
    return (1.0 - std::exp(-xi)) / xi;
  }
  // 1/(k+1)! for k = 0..14.
  static constexpr double kQTaylor[15] = {
      1.0,
      1.0 / 2.0,
      1.0 / 6.0,
      1.0 / 24.0,
      1.0 / 120.0,
      1.0 / 720.0,
      1.0 / 5040.0,
      1.0 / 40320.0,
      1.0 / 362880.0,
      1.0 / 3628800.0,
      1.0 / 39916800.0,
      1.0 / 479001600.0,
      1.0 / 6227020800.0,
      1.0 / 87178291200.0,
      1.0 / 1307674368000.0,
  };
  double s = kQTaylor[14];
  for (int k = 13; k >= 0; --k) {
    s = kQTaylor[k] - xi * s;
  }
  return s;
}

}  // namespace

Complex fn_top_nonneg(Complex z, const ExpSumTable& table) {
  if (z.real() < 0.0) {
    throw std::domain_error("fn_top_nonneg requires Re(z) >= 0");
  }
  // F(n_max, z) = (1/2) sum_m w_m e^{eta_m} q(z + eta_m).  The factored
  // e^{eta_m} keeps each term's magnitude near |w_m e^{eta_m}|, and q is
  // evaluated stably through its Taylor guard near zero.
  const Complex e_neg_z = std::exp(-z);
  const double guard = region_params().guard_radius;
  detail::CompensatedComplexSum acc;
  const int m_count = static_cast<int>(table.eta.size());
  for (int m = 0; m < m_count; ++m) {
    const Complex xi = z + table.eta[m];
    Complex term;
    if (std::abs(xi) <= guard) {
      term = table.w_exp_eta[m] * q_eval(xi);
    } else {
      term = table.w_exp_eta[m] * (1.0 - e_neg_z * table.exp_neg_eta[m]) / xi;
    }
    acc.add(term);
  }
  return 0.5 * acc.value();
}

Complex fn_top_neg_scaled(Complex z, const ExpSumTable& table) {
  if (z.real() >= 0.0) {
    throw std::domain_error("fn_top_neg_scaled requires Re(z) < 0");
  }
  // e^z F(n_max, z) = (1/2) sum_m w_m (e^{z + eta_m} - 1) / (z + eta_m),
  // written through (e^xi - 1)/xi = q(-xi) so the removable singularities
  // at z = -eta_m stay smooth.
  const Complex e_z = std::exp(z);
  const double guard = region_params().guard_radius;
  detail::CompensatedComplexSum acc;
  const int m_count = static_cast<int>(table.eta.size());
  for (int m = 0; m < m_count; ++m) {
    const Complex xi = z + table.eta[m];
    Complex term;
    if (std::abs(xi) <= guard) {
      term = table.w[m] * q_eval(-xi);
    } else {
      term = table.w[m] * (e_z * table.exp_eta[m] - 1.0) / xi;
    }
    acc.add(term);
  }
  return 0.5 * acc.value();
}

double fn_top_real(double x, const ExpSumTable& table) {
  if (x < 0.0) {
    throw std::domain_error("fn_top_real requires x >= 0");
  }
  if (!table.pairs_valid) {
    return fn_top_nonneg(Complex(x, 0.0), table).real();
  }
  // Conjugate terms contribute conjugate values at real x, so each pair
  // collapses to twice the real part of one member and the purely real
  // rows stay in real arithmetic throughout.
  const double e_neg_x = std::exp(-x);
  const double guard = region_params().guard_radius;
  detail::CompensatedSum acc;
  for (int m : table.pair_idx) {
    const Complex xi = x + table.eta[m];
    Complex term;
    if (std::abs(xi) <= guard) {
      term = table.w_exp_eta[m] * q_eval(xi);
    } else {
      term = table.w_exp_eta[m] * (1.0 - e_neg_x * table.exp_neg_eta[m]) / xi;
    }
    acc.add(2.0 * term.real());
  }
  for (int m : table.real_idx) {
    const double eta = table.eta[m].real();
    const double w_exp_eta = table.w_exp_eta[m].real();
    const double xi = x + eta;
    double term;
    if (std::abs(xi) <= guard) {
      term = w_exp_eta * q_real(xi);
    } else {
      term = w_exp_eta * (1.0 - e_neg_x * table.exp_neg_eta[m].real()) / xi;
    }
    acc.add(term);
  }
  return 0.5 * acc.value();
}

}  // namespace boys
