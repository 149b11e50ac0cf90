#include "boys/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "boys/constants.hpp"
#include "boys/detail/compensated.hpp"
#include "boys/gauss_legendre.hpp"

namespace boys {

namespace {

constexpr double kEps = 2.220446049250313e-16;

const QuadRule& unit_rule() {
  static const QuadRule rule = build_gauss_legendre(32, 0.0, 1.0);
  return rule;
}

// One composite pass: the unit rule replicated over `panels` equal
// subintervals of [0, hi], compensated accumulation. abs_mass collects
// int |f|, the scale that exponent rounding noise is proportional to.
template <class F>
Complex composite(F&& integrand, double hi, int panels, double& abs_mass) {
  const QuadRule& rule = unit_rule();
  const double h = hi / panels;
  detail::CompensatedComplexSum acc;
  detail::CompensatedSum mass;
  for (int k = 0; k < panels; ++k) {
    const double base = k * h;
    for (std::size_t m = 0; m < rule.nodes.size(); ++m) {
      const double t = base + h * rule.nodes[m];
      const Complex term = (h * rule.weights[m]) * integrand(t);
      acc.add(term);
      mass.add(std::abs(term));
    }
  }
  abs_mass = mass.value();
  return acc.value();
}

// Doubles the panel count until two refinements agree to the rounding
// floor. Each exp(arg) call carries |arg| eps of argument rounding, so
// two panelizations of a converged integral still differ by about
// exp_mag * eps * int |f|; the plateau test must sit above that, not at
// 2 eps |value|, or large exponents never "converge".
template <class F>
Complex refine(F&& integrand, double hi, int panels0, double exp_mag, const char* what) {
  double mass = 0.0;
  Complex cur = composite(integrand, hi, panels0, mass);
  int panels = panels0;
  for (int pass = 0; pass < 5; ++pass) {
    const Complex prev = cur;
    panels *= 2;
    cur = composite(integrand, hi, panels, mass);
    const double floor = std::max({1e-16, 2.0 * kEps * std::abs(cur), kEps * exp_mag * mass});
    if (std::abs(cur - prev) <= floor) {
      return cur;
    }
  }
  throw std::runtime_error(std::string(what) + ": quadrature did not converge");
}

int initial_panels(double abs_z) {
  return static_cast<int>(std::ceil(64.0 * (1.0 + std::sqrt(abs_z) / 10.0)));
}

}  // namespace

Complex oracle_boys(int n, Complex z, bool scaled) {
  if (n < 0 || n > 64) {
    throw std::domain_error("oracle_boys requires 0 <= n <= 64");
  }
  const double r = std::abs(z);
  if (!std::isfinite(r) || r > 1e4) {
    throw std::domain_error("oracle_boys requires finite |z| <= 1e4");
  }
  if (!scaled && z.real() < -700.0) {
    throw std::domain_error("oracle_boys: unscaled values overflow for Re(z) < -700, use scaled");
  }
  auto integrand = [n, z, scaled](double t) {
    const double t2 = t * t;
    double tp = 1.0;
    for (int i = 0; i < n; ++i) {
      tp *= t2;
    }
    return tp * (scaled ? std::exp(z * (1.0 - t2)) : std::exp(-z * t2));
  };
  return refine(integrand, 1.0, initial_panels(r), r, "oracle_boys");
}

Complex oracle_tail_integral(Complex z, double t_hi) {
  const RegionParams& rp = region_params();
  if (t_hi != rp.t_max && t_hi != rp.t_max1) {
    throw std::domain_error("oracle_tail_integral requires t_hi in {t_max, t_max1}");
  }
  const double r = std::abs(z);
  if (!(z.real() >= 0.0) || !(r >= rp.r0) || !std::isfinite(r)) {
    throw std::domain_error("oracle_tail_integral requires Re(z) >= 0 and |z| >= r0");
  }
  const double inv_sqrt_pi = 1.0 / std::sqrt(std::numbers::pi);
  auto integrand = [z, inv_sqrt_pi](double t) {
    const double t2 = t * t;
    return inv_sqrt_pi * std::exp(-t2) / (t2 + z);
  };
  return refine(integrand, t_hi, initial_panels(r), t_hi * t_hi, "oracle_tail_integral");
}

double oracle_upper_incomplete_gamma(int j, double x) {
  if (j < 0 || j > 8) {
    throw std::domain_error("oracle_upper_incomplete_gamma requires 0 <= j <= 8");
  }
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error("oracle_upper_incomplete_gamma requires finite x > 0");
  }
  // t = x + v^2 turns t^{j-1/2} e^{-t} into 2 e^{-x} (x+v^2)^{j-1/2} e^{-v^2} v,
  // removing the endpoint singularity; geometric panels toward v = 0 resolve
  // the sqrt(x)-wide layer of the j = 0 integrand for arbitrarily small x.
  const QuadRule& rule = unit_rule();
  const double v_hi = std::sqrt(60.0 + 10.0 * j);
  detail::CompensatedSum acc;
  double upper = v_hi;
  for (int k = 0; k <= 40; ++k) {
    const double lower = (k == 40) ? 0.0 : upper * 0.5;
    const double h = upper - lower;
    for (std::size_t m = 0; m < rule.nodes.size(); ++m) {
      const double v = lower + h * rule.nodes[m];
      const double u = x + v * v;
      double up = 1.0;
      for (int i = 0; i < j; ++i) {
        up *= u;
      }
      const double f = up / std::sqrt(u) * std::exp(-v * v) * v;
      acc.add(h * rule.weights[m] * f);
    }
    upper = lower;
  }
  return 2.0 * std::exp(-x) * acc.value();
}

}  // namespace boys
