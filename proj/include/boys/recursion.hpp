#pragma once

#include <vector>

#include "boys/tables.hpp"
#include "boys/types.hpp"

namespace boys {

// Per-step constants of the two recursions, precomputed once:
//   a_n = n - 1/2, b_n = 1/(2n - 1), c_n = 2/(2n - 1) = 1/a_n.
struct RecursionCoeffs {
  std::vector<double> a;
  std::vector<double> b;
  std::vector<double> c;
};

RecursionCoeffs make_recursion_coeffs(int n_max);

// Raising step, out[n] = a_n (1/z) out[n-1] - v, where v = e^{-z}/(2z)
// unscaled and 1/(2z) scaled. Two multiplications and one addition per
// step with precomputed coefficients. out[0] must hold the seed.
// Templated over the value type so a counting type can audit the
// operation budget.
template <class V, class R>
inline void forward_steps(V* out, const V& inv_z, const V& v, const R* a, int n_max) {
  for (int n = 1; n <= n_max; ++n) {
    out[n] = a[n - 1] * (inv_z * out[n - 1]) - v;
  }
}

// Lowering step, out[n-1] = c_n z out[n] + b_n e, where e = e^{-z}
// unscaled and 1 scaled. Three multiplications and one addition per
// step. out[n_max] must hold the seed; safe at z = 0.
template <class V, class R>
inline void backward_steps(V* out, const V& z, const V& e, const R* b, const R* c, int n_max) {
  for (int n = n_max; n >= 1; --n) {
    out[n - 1] = c[n - 1] * (z * out[n]) + b[n - 1] * e;
  }
}

// Fills F(0..n_max, z) (or the scaled variant) upward from a seed F(0,z).
// Caller dispatch guarantees |z| >= z*(n_max) > 0; throws std::domain_error
// at z = 0.
BoysVector forward_sweep(Complex f0, Complex z, int n_max, bool scaled);

// Fills downward from a seed F(n_max, z). Safe for any z including 0.
BoysVector backward_sweep(Complex f_top, Complex z, int n_max, bool scaled);

// Full-vector evaluation: scaled = (Re(z) < 0); seeds F(0,z) and runs
// forward when |z| >= z*(n_max), otherwise seeds F(table n_max, z) from
// the exponential sum and runs backward (truncating to n_max entries).
// Throws std::domain_error when n_max exceeds the table order.
BoysVector boys_all(Complex z, int n_max, const ExpSumTable& table);
BoysVector boys_all(Complex z, int n_max = 12);

}  // namespace boys
