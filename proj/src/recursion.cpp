#include "boys/recursion.hpp"

#include <cmath>
#include <stdexcept>

#include "boys/constants.hpp"
#include "boys/f0.hpp"
#include "boys/fn_top.hpp"

namespace boys {

RecursionCoeffs make_recursion_coeffs(int n_max) {
  if (n_max < 0 || n_max > 4096) {
    throw std::domain_error("make_recursion_coeffs requires 0 <= n_max <= 4096");
  }
  RecursionCoeffs rc;
  rc.a.resize(n_max);
  rc.b.resize(n_max);
  rc.c.resize(n_max);
  for (int n = 1; n <= n_max; ++n) {
    rc.a[n - 1] = n - 0.5;
    rc.b[n - 1] = 1.0 / (2.0 * n - 1.0);
    rc.c[n - 1] = 2.0 / (2.0 * n - 1.0);
  }
  return rc;
}

namespace {

// Coefficient prefixes are shared: entry n-1 depends only on n, so one
// table sized for the largest supported order serves every smaller sweep.
const RecursionCoeffs& coeffs_for(int n_max) {
  static const RecursionCoeffs cached = make_recursion_coeffs(64);
  if (n_max <= 64) {
    return cached;
  }
  static thread_local RecursionCoeffs big;
  if (static_cast<int>(big.a.size()) < n_max) {
    big = make_recursion_coeffs(n_max);
  }
  return big;
}

}  // namespace

BoysVector forward_sweep(Complex seed, Complex z, int n_max, bool scaled) {
  if (n_max < 0) {
    throw std::domain_error("forward_sweep requires n_max >= 0");
  }
  if (n_max >= 1 && z == Complex(0.0, 0.0)) {
    throw std::domain_error("forward_sweep requires z != 0");
  }
  BoysVector r;
  r.z = z;
  r.scaled = scaled;
  r.n_max = n_max;
  r.values.resize(n_max + 1);
  r.values[0] = seed;
  if (n_max >= 1) {
    const Complex inv_z = 1.0 / z;
    const Complex v = scaled ? 0.5 * inv_z : std::exp(-z) * (0.5 * inv_z);
    const RecursionCoeffs& rc = coeffs_for(n_max);
    forward_steps(r.values.data(), inv_z, v, rc.a.data(), n_max);
  }
  return r;
}

BoysVector backward_sweep(Complex seed, Complex z, int n_max, bool scaled) {
  if (n_max < 0) {
    throw std::domain_error("backward_sweep requires n_max >= 0");
  }
  BoysVector r;
  r.z = z;
  r.scaled = scaled;
  r.n_max = n_max;
  r.values.resize(n_max + 1);
  r.values[n_max] = seed;
  if (n_max >= 1) {
    const Complex e = scaled ? Complex(1.0, 0.0) : std::exp(-z);
    const RecursionCoeffs& rc = coeffs_for(n_max);
    backward_steps(r.values.data(), z, e, rc.b.data(), rc.c.data(), n_max);
  }
  return r;
}

BoysVector boys_all(Complex z, int n_max, const ExpSumTable& table) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw std::domain_error("boys_all requires finite z");
  }
  if (n_max < 0 || n_max > table.n_max) {
    throw std::domain_error("boys_all requires 0 <= n_max <= table order");
  }
  const bool scaled = z.real() < 0.0;
  if (n_max == 0) {
    BoysVector r;
    r.z = z;
    r.scaled = scaled;
    r.n_max = 0;
    r.values = {f0_eval(z).value};
    return r;
  }
  // Forward is contractive only once |z| dominates the coefficient growth;
  // below the geometric-mean threshold the seed comes from the top order.
  if (std::abs(z) >= compute_z_star(n_max)) {
    return forward_sweep(f0_eval(z).value, z, n_max, scaled);
  }
  const Complex top = scaled ? fn_top_neg_scaled(z, table) : fn_top_nonneg(z, table);
  BoysVector r = backward_sweep(top, z, table.n_max, scaled);
  r.values.resize(n_max + 1);
  r.n_max = n_max;
  return r;
}

BoysVector boys_all(Complex z, int n_max) { return boys_all(z, n_max, expsum_table()); }

}  // namespace boys
