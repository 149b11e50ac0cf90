#pragma once

#include <vector>

#include "boys/gauss_legendre.hpp"

namespace boys {

// Thresholds and sizes shared by the evaluation engines.
struct RegionParams {
  double r0 = 0.35;             // Taylor region: |z| <= r0
  double t_max = 0.0;           // e^{7/4}, quadrature cutoff
  double t_max_sq = 0.0;        // t_max^2 (one ulp from e^{7/2})
  double t_max1 = 0.0;          // sqrt(t_max^2 + 1), shifted cutoff
  double t_max1_sq = 0.0;       // t_max_sq + 1, exact
  double switch_radius = 0.5;   // |z + t_max^2| <= 1/2 selects the shifted rule
  double big_z = 100.0;         // series region: |z| >= big_z
  int J = 6;                    // series terms j = 0..J
  int M_gl = 24;                // Gauss-Legendre size for the scaled mid region
  int taylor_terms_f0 = 10;
  double guard_radius = 0.5;    // q(xi) switches to its Taylor form inside this
};

const RegionParams& region_params();

// (prod_{j=1..n_max} (j - 1/2))^{1/n_max}, the modulus threshold between
// forward and backward recursion; computed in log space to avoid overflow.
double compute_z_star(int n_max);

// c_j = Gamma(j+1/2) - Gamma(j+1/2, t_cut^2) for the large-|z| series
//   F(0,z) ~= (1/2) sqrt(pi/z) - (e^{-z}/(2 sqrt(pi) z)) sum_j (-1)^j z^{-j} c_j.
// gamma_half is built from Gamma(1/2) = sqrt(pi) by the half-integer
// recurrence; the incomplete-gamma corrections come from the oracle
// integrator once at startup.
struct SeriesCoeffs {
  std::vector<double> c;
  std::vector<double> gamma_half;
  double t_cut = 0.0;
};

SeriesCoeffs build_series_coeffs(double t_cut, int J);

// Shared immutable instances, built once on first use.
const QuadRule& gl_rule();           // M_gl points on [0, t_max]
const QuadRule& gl_rule_shifted();   // M_gl points on [0, t_max1]
const SeriesCoeffs& series_coeffs();
const SeriesCoeffs& series_coeffs_shifted();

}  // namespace boys
