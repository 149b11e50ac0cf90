#include "boys/real_path.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "boys/constants.hpp"
#include "boys/fn_top.hpp"
#include "boys/oracle.hpp"
#include "boys/recursion.hpp"

namespace boys {

namespace {

// (-1)^j / (j! (2j+1)) for j = 0..9, shared with the complex small-|z| branch.
constexpr double kF0Taylor[10] = {
    1.0,
    -1.0 / 3.0,
    1.0 / 10.0,
    -1.0 / 42.0,
    1.0 / 216.0,
    -1.0 / 1320.0,
    1.0 / 9360.0,
    -1.0 / 75600.0,
    1.0 / 685440.0,
    -1.0 / 6894720.0,
};

double f0_taylor_real(double x) {
  double s = kF0Taylor[9];
  for (int j = 8; j >= 0; --j) {
    s = kF0Taylor[j] + x * s;
  }
  return s;
}

double f0_erf(double x) {
  const double r = std::sqrt(x);
  return std::sqrt(std::numbers::pi) * std::erf(r) / (2.0 * r);
}

void check_erf_against_oracle() {
  static const bool ok = [] {
    constexpr double probes[5] = {0.5, 1.0, 4.0, 25.0, 100.0};
    for (double x : probes) {
      const double ref = oracle_boys(0, Complex(x, 0.0), false).real();
      if (std::abs(f0_erf(x) - ref) > 1e-14) {
        return false;
      }
    }
    return true;
  }();
  if (!ok) {
    throw std::runtime_error("std::erf disagrees with the quadrature oracle");
  }
}

}  // namespace

double f0_real(double x) {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw std::domain_error("f0_real requires finite x >= 0");
  }
  if (x <= region_params().r0) {
    return f0_taylor_real(x);
  }
  check_erf_against_oracle();
  return f0_erf(x);
}

std::vector<double> boys_all_real(double x, int n_max, const ExpSumTable& table) {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw std::domain_error("boys_all_real requires finite x >= 0");
  }
  if (n_max < 0 || n_max > table.n_max) {
    throw std::domain_error("boys_all_real requires 0 <= n_max <= table order");
  }
  if (n_max == 0) {
    return {f0_real(x)};
  }
  const RecursionCoeffs rc = make_recursion_coeffs(table.n_max);
  if (x >= compute_z_star(n_max)) {
    std::vector<double> out(n_max + 1);
    out[0] = f0_real(x);
    const double inv_x = 1.0 / x;
    const double v = std::exp(-x) * (0.5 * inv_x);
    forward_steps(out.data(), inv_x, v, rc.a.data(), n_max);
    return out;
  }
  std::vector<double> out(table.n_max + 1);
  out[table.n_max] = fn_top_real(x, table);
  const double e = std::exp(-x);
  backward_steps(out.data(), x, e, rc.b.data(), rc.c.data(), table.n_max);
  out.resize(n_max + 1);
  return out;
}

std::vector<double> boys_all_real(double x, int n_max) {
  return boys_all_real(x, n_max, expsum_table());
}

}  // namespace boys
