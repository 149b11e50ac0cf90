#include "boys/constants.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "boys/oracle.hpp"

namespace boys {

const RegionParams& region_params() {
  static const RegionParams p = [] {
    RegionParams r;
    r.t_max = std::exp(1.75);
    r.t_max_sq = r.t_max * r.t_max;
    r.t_max1_sq = r.t_max_sq + 1.0;  // exact: 1 is a multiple of ulp(t_max_sq)
    r.t_max1 = std::sqrt(r.t_max1_sq);
    return r;
  }();
  return p;
}

double compute_z_star(int n_max) {
  if (n_max < 1) {
    throw std::domain_error("compute_z_star: n_max must be >= 1");
  }
  double log_prod = 0.0;
  for (int j = 1; j <= n_max; ++j) {
    log_prod += std::log(j - 0.5);
  }
  return std::exp(log_prod / n_max);
}

SeriesCoeffs build_series_coeffs(double t_cut, int J) {
  if (J < 0) {
    throw std::domain_error("build_series_coeffs: J must be >= 0");
  }
  SeriesCoeffs sc;
  sc.t_cut = t_cut;
  sc.gamma_half.resize(J + 1);
  sc.c.resize(J + 1);
  sc.gamma_half[0] = std::sqrt(std::numbers::pi);
  for (int j = 1; j <= J; ++j) {
    sc.gamma_half[j] = (j - 0.5) * sc.gamma_half[j - 1];
  }
  const double x = t_cut * t_cut;
  for (int j = 0; j <= J; ++j) {
    sc.c[j] = sc.gamma_half[j] - oracle_upper_incomplete_gamma(j, x);
  }
  return sc;
}

const QuadRule& gl_rule() {
  static const QuadRule r =
      build_gauss_legendre(region_params().M_gl, 0.0, region_params().t_max);
  return r;
}

const QuadRule& gl_rule_shifted() {
  static const QuadRule r =
      build_gauss_legendre(region_params().M_gl, 0.0, region_params().t_max1);
  return r;
}

const SeriesCoeffs& series_coeffs() {
  static const SeriesCoeffs sc = build_series_coeffs(region_params().t_max, region_params().J);
  return sc;
}

const SeriesCoeffs& series_coeffs_shifted() {
  static const SeriesCoeffs sc = build_series_coeffs(region_params().t_max1, region_params().J);
  return sc;
}

}  // namespace boys
