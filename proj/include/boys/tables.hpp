#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "boys/types.hpp"

namespace boys {

// Poles eta_m and weights v_m of the 22-term pole expansion
//   F(0,z) ~= (1/2) sqrt(pi/z) - (e^{-z}/2) sum_m v_m/(eta_m + z)
// used for 0.35 < |z| < 100, Re(z) >= 0. The v_m column sums to 1.
struct F0QuadTable {
  std::vector<double> poles;    // ascending, all > 0
  std::vector<double> weights;  // v_m, all > 0
  double eps_quad = 0.0;        // certified residual bound of the pole sum
  double eps_tail = 0.0;        // dropped exp(-t^2) tail beyond t_max
};

F0QuadTable build_f0_table();
const F0QuadTable& f0_table();

// Complex exponents and weights approximating g(s) = (1-s)^{n_max - 1/2}
// on [0,1] as sum_m w_m e^{eta_m s}, uniform error <= eps. Drives the
// direct evaluation of F(n_max, z). Entries come in conjugate pairs plus
// a few purely real terms; per-term exponentials are precomputed because
// they do not depend on z.
struct ExpSumTable {
  int n_max = 0;
  int M = 0;
  double eps = 0.0;
  std::vector<Complex> eta;
  std::vector<Complex> w;

  std::vector<Complex> exp_eta;      // e^{eta_m}
  std::vector<Complex> exp_neg_eta;  // e^{-eta_m}
  std::vector<Complex> w_exp_eta;    // w_m e^{eta_m}

  // Conjugate-pair structure for the real-argument fast path: pair_idx
  // holds the member of each pair with Im(eta) > 0, real_idx the purely
  // real rows. Empty pair/real split with pairs_valid = false means the
  // table has no usable pair structure and the real path falls back to
  // complex arithmetic.
  std::vector<int> pair_idx;
  std::vector<int> real_idx;
  bool pairs_valid = false;
};

// Only n_max = 12 ships embedded; other orders require a table file.
// Throws std::domain_error("no approximation table ...") otherwise.
ExpSumTable build_expsum_table(int n_max);
const ExpSumTable& expsum_table();  // the shipped n_max = 12 table

// Plain-text table file: line 1 "n_max M eps", then M lines
// "eta_re eta_im w_re w_im", scientific notation, 17 significant digits.
// Writing then parsing reproduces every double bit-exactly.
// parse/load throw std::runtime_error on malformed input or when the
// residual max_s |g(s) - sum w e^{eta s}| exceeds 10*eps.
ExpSumTable parse_expsum_table(std::istream& in);
ExpSumTable load_expsum_table(const std::string& path);
void write_expsum_table(const ExpSumTable& t, std::ostream& out);

}  // namespace boys
