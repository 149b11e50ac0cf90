#include "boys/gauss_legendre.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "boys/detail/compensated.hpp"

namespace boys {

namespace {

// P_M(x) and P_M'(x) by the three-term recurrence.
std::pair<double, double> legendre_and_deriv(int M, double x) {
  double p0 = 1.0;
  double p1 = x;
  for (int k = 2; k <= M; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  if (M == 1) {
    return {x, 1.0};
  }
  const double dp = M * (x * p1 - p0) / (x * x - 1.0);
  return {p1, dp};
}

}  // namespace

QuadRule build_gauss_legendre(int M, double a, double b) {
  if (M < 1) {
    throw std::domain_error("build_gauss_legendre: M must be >= 1");
  }
  if (!(a < b)) {
    throw std::domain_error("build_gauss_legendre: requires a < b");
  }

  QuadRule rule;
  rule.a = a;
  rule.b = b;
  rule.nodes.resize(M);
  rule.weights.resize(M);

  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);

  // Roots come in +- pairs; solve the positive half and mirror.
  for (int k = 1; k <= (M + 1) / 2; ++k) {
    double x = std::cos(std::numbers::pi * (k - 0.25) / (M + 0.5));
    bool converged = false;
    for (int it = 0; it < 100; ++it) {
      const auto [p, dp] = legendre_and_deriv(M, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) <= 1e-15) {
        // One polishing step; Newton doubles the correct digits.
        const auto [p2, dp2] = legendre_and_deriv(M, x);
        x -= p2 / dp2;
        converged = true;
        break;
      }
    }
    if (!converged) {
      throw std::runtime_error("build_gauss_legendre: Newton iteration did not converge");
    }
    const auto [p, dp] = legendre_and_deriv(M, x);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    // k = 1 has the largest root; c - h*x orders nodes ascending.
    rule.nodes[k - 1] = c - h * x;
    rule.weights[k - 1] = h * w;
    rule.nodes[M - k] = c + h * x;
    rule.weights[M - k] = h * w;
  }

  // The solved weights sum to b - a only within a couple of ulp; rescale
  // so constants integrate exactly and composite refinements of smooth
  // integrands plateau at the rounding floor.
  detail::CompensatedSum total;
  for (double w : rule.weights) {
    total.add(w);
  }
  const double scale = (b - a) / total.value();
  for (double& w : rule.weights) {
    w *= scale;
  }
  return rule;
}

}  // namespace boys
