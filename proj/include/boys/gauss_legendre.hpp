#pragma once

#include <vector>

namespace boys {

// Nodes and weights of an M-point Gauss-Legendre rule on (a, b).
// Exact for polynomials up to degree 2M-1; weights sum to b - a.
struct QuadRule {
  std::vector<double> nodes;    // ascending, all in (a, b)
  std::vector<double> weights;  // all positive
  double a = 0.0;
  double b = 0.0;
};

// Newton iteration on the degree-M Legendre polynomial, started from the
// Chebyshev-angle guesses cos(pi (k - 1/4)/(M + 1/2)); stops at |dx| <= 1e-15
// and takes one polishing step. Throws std::domain_error for M < 1 or a >= b,
// std::runtime_error if an iteration fails to converge.
QuadRule build_gauss_legendre(int M, double a, double b);

}  // namespace boys
