#include "boys/f0.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "boys/constants.hpp"
#include "boys/tables.hpp"

namespace boys {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

// 1/(k+1)! for k = 0..14; every factorial here is exact in a double.
constexpr double kQTaylor[15] = {
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

// (-1)^j / (j! (2j+1)) for j = 0..9, the Taylor coefficients of F(0,z).
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

Complex q_taylor(Complex xi) {
  Complex s = kQTaylor[14];
  for (int k = 13; k >= 0; --k) {
    s = kQTaylor[k] - xi * s;
  }
  return s;
}

Complex f0_taylor(Complex z) {
  Complex s = kF0Taylor[9];
  for (int j = 8; j >= 0; --j) {
    s = kF0Taylor[j] + z * s;
  }
  return s;
}

// sum_j (-1)^j z^{-j} c_j as a Horner polynomial in 1/z.
Complex series_sum(Complex inv_z, const SeriesCoeffs& sc) {
  const auto& c = sc.c;
  Complex s = c.back();
  for (int j = static_cast<int>(c.size()) - 2; j >= 0; --j) {
    s = c[j] - inv_z * s;
  }
  return s;
}

// Scaled-region tables derived from the quadrature rules: t_m^2 and
// e^{-t_m^2} per node, fixed per variant.
struct GLNodeData {
  std::vector<double> tsq;
  std::vector<double> exp_neg_tsq;
  double T = 0.0;
};

GLNodeData make_node_data(const QuadRule& rule) {
  GLNodeData d;
  d.T = rule.b;
  d.tsq.reserve(rule.nodes.size());
  d.exp_neg_tsq.reserve(rule.nodes.size());
  for (double t : rule.nodes) {
    d.tsq.push_back(t * t);
    d.exp_neg_tsq.push_back(std::exp(-t * t));
  }
  return d;
}

const GLNodeData& node_data() {
  static const GLNodeData d = make_node_data(gl_rule());
  return d;
}

const GLNodeData& node_data_shifted() {
  static const GLNodeData d = make_node_data(gl_rule_shifted());
  return d;
}

Complex f0_nonneg_impl(Complex z, F0Region* region) {
  const RegionParams& rp = region_params();
  const double r = std::abs(z);

  if (r <= rp.r0) {
    *region = F0Region::Taylor;
    return f0_taylor(z);
  }

  const Complex half_sqrt_pi_over_z = 0.5 * std::sqrt(std::numbers::pi / z);
  const Complex e_neg_z = std::exp(-z);

  if (r >= rp.big_z) {
    *region = F0Region::LargeSeries;
    const Complex inv_z = 1.0 / z;
    return half_sqrt_pi_over_z -
           e_neg_z * inv_z / (2.0 * kSqrtPi) * series_sum(inv_z, series_coeffs());
  }

  *region = F0Region::PoleSum;
  const F0QuadTable& t = f0_table();
  Complex sum = 0.0;
  for (int m = 0; m < static_cast<int>(t.poles.size()); ++m) {
    sum += t.weights[m] / (t.poles[m] + z);
  }
  return half_sqrt_pi_over_z - 0.5 * e_neg_z * sum;
}

Complex f0_neg_scaled_impl(Complex z, F0Region* region) {
  const RegionParams& rp = region_params();
  const double r = std::abs(z);
  const Complex e_z = std::exp(z);

  if (r <= rp.r0) {
    *region = F0Region::Taylor;
    return e_z * f0_taylor(z);
  }

  if (r >= rp.big_z) {
    *region = F0Region::LargeSeriesScaled;
    const Complex inv_z = 1.0 / z;
    // e^z (1/2) sqrt(pi/z) stays bounded: |e^z| <= 1 here.
    return e_z * 0.5 * std::sqrt(std::numbers::pi / z) -
           inv_z / (2.0 * kSqrtPi) * series_sum(inv_z, series_coeffs());
  }

  const bool shifted = std::abs(z + rp.t_max_sq) <= rp.switch_radius;
  *region = shifted ? F0Region::GLArctanShifted : F0Region::GLArctan;
  const GLNodeData& nd = shifted ? node_data_shifted() : node_data();
  const QuadRule& rule = shifted ? gl_rule_shifted() : gl_rule();

  Complex sum = 0.0;
  const int M = static_cast<int>(rule.nodes.size());
  for (int m = 0; m < M; ++m) {
    const Complex xi = nd.tsq[m] + z;
    Complex term;
    if (std::abs(xi) <= rp.guard_radius) {
      term = e_z * q_taylor(xi);
    } else {
      term = (e_z - nd.exp_neg_tsq[m]) / xi;
    }
    sum += rule.weights[m] * term;
  }

  const Complex sqrt_z = std::sqrt(z);
  return sum / kSqrtPi + e_z / (kSqrtPi * sqrt_z) * arctan_complex(sqrt_z / nd.T);
}

}  // namespace

Complex q_eval(Complex xi) {
  if (std::abs(xi) <= region_params().guard_radius) {
    return q_taylor(xi);
  }
  return (1.0 - std::exp(-xi)) / xi;
}

Complex arctan_complex(Complex w) {
  if (w == Complex(0.0, 1.0) || w == Complex(0.0, -1.0)) {
    throw std::domain_error("arctan_complex: pole at w = +-i");
  }
  const Complex iw(-w.imag(), w.real());
  return Complex(0.0, 0.5) * std::log((1.0 - iw) / (1.0 + iw));
}

Complex f0_nonneg(Complex z) {
  if (z.real() < 0.0) {
    throw std::domain_error("f0_nonneg: Re(z) < 0, use f0_neg_scaled");
  }
  F0Region region;
  return f0_nonneg_impl(z, &region);
}

Complex f0_neg_scaled(Complex z) {
  if (z.real() >= 0.0) {
    throw std::domain_error("f0_neg_scaled: Re(z) >= 0, use f0_nonneg");
  }
  F0Region region;
  return f0_neg_scaled_impl(z, &region);
}

F0Result f0_eval(Complex z) {
  F0Result res;
  res.scaled = z.real() < 0.0;
  res.value = res.scaled ? f0_neg_scaled_impl(z, &res.region) : f0_nonneg_impl(z, &res.region);
  return res;
}

FresnelValue fresnel(double y) {
  if (y == 0.0) {
    return {0.0, 0.0};
  }
  const double a = std::abs(y);
  const double sign = y > 0.0 ? 1.0 : -1.0;
  const Complex w = a * f0_nonneg(Complex(0.0, 0.5 * std::numbers::pi * a * a));
  return {sign * w.real(), sign * -w.imag()};
}

}  // namespace boys
