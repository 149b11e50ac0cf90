#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "boys/constants.hpp"
#include "boys/f0.hpp"
#include "boys/fn_top.hpp"
#include "boys/oracle.hpp"
#include "boys/recursion.hpp"
#include "boys/types.hpp"
#include "doctest.h"

using boys::Complex;

namespace {

// Scalar that counts multiplications and additions flowing through the
// recursion step templates.
struct Counted {
  double v = 0.0;
  static inline int muls = 0;
  static inline int adds = 0;
  static void reset() { muls = adds = 0; }
};

Counted operator*(double a, Counted b) {
  ++Counted::muls;
  return {a * b.v};
}
Counted operator*(Counted a, Counted b) {
  ++Counted::muls;
  return {a.v * b.v};
}
Counted operator+(Counted a, Counted b) {
  ++Counted::adds;
  return {a.v + b.v};
}
Counted operator-(Counted a, Counted b) {
  ++Counted::adds;
  return {a.v - b.v};
}

}  // namespace

TEST_SUITE("recursion") {

TEST_CASE("per-step coefficients") {
  const boys::RecursionCoeffs rc = boys::make_recursion_coeffs(12);
  REQUIRE(rc.a.size() == 12);
  REQUIRE(rc.b.size() == 12);
  REQUIRE(rc.c.size() == 12);
  CHECK(rc.a[0] == 0.5);
  CHECK(rc.a[11] == 11.5);
  CHECK(rc.b[0] == 1.0);
  CHECK(rc.c[0] == 2.0);
  for (int k = 0; k < 12; ++k) {
    CHECK(rc.a[k] == k + 0.5);
    CHECK(std::abs(rc.b[k] * (2 * k + 1) - 1.0) <= 2e-16);
    CHECK(std::abs(rc.c[k] * rc.a[k] - 1.0) <= 2e-16);
  }
  CHECK_THROWS_AS(boys::make_recursion_coeffs(-1), std::domain_error);
  CHECK_THROWS_AS(boys::make_recursion_coeffs(5000), std::domain_error);
}

TEST_CASE("raising step costs two multiplications and one addition") {
  const boys::RecursionCoeffs rc = boys::make_recursion_coeffs(12);
  std::vector<Counted> out(13);
  out[0] = {1.0};
  Counted::reset();
  boys::forward_steps(out.data(), Counted{0.1}, Counted{0.05}, rc.a.data(), 12);
  CHECK(Counted::muls == 2 * 12);
  CHECK(Counted::adds == 12);

  // same arithmetic as the double instantiation
  std::vector<double> ref(13, 0.0);
  ref[0] = 1.0;
  boys::forward_steps(ref.data(), 0.1, 0.05, rc.a.data(), 12);
  for (int n = 0; n <= 12; ++n) CHECK(out[n].v == ref[n]);
}

TEST_CASE("lowering step costs three multiplications and one addition") {
  const boys::RecursionCoeffs rc = boys::make_recursion_coeffs(12);
  std::vector<Counted> out(13);
  out[12] = {0.04};
  Counted::reset();
  boys::backward_steps(out.data(), Counted{2.0}, Counted{0.135}, rc.b.data(), rc.c.data(), 12);
  CHECK(Counted::muls == 3 * 12);
  CHECK(Counted::adds == 12);

  std::vector<double> ref(13, 0.0);
  ref[12] = 0.04;
  boys::backward_steps(ref.data(), 2.0, 0.135, rc.b.data(), rc.c.data(), 12);
  for (int n = 0; n <= 12; ++n) CHECK(out[n].v == ref[n]);
}

TEST_CASE("z = 0 gives 1/(2n+1) through the lowering recursion") {
  const boys::BoysVector r = boys::boys_all(Complex(0.0, 0.0), 12);
  REQUIRE(r.values.size() == 13);
  CHECK(r.scaled == false);
  for (int n = 0; n <= 11; ++n) {
    CHECK(r.values[n].real() == 1.0 / (2 * n + 1));
    CHECK(r.values[n].imag() == 0.0);
  }
  CHECK(std::abs(r.values[12] - 0.04) <= 2.5e-14);
}

TEST_CASE("lowering case z = 1") {
  const boys::BoysVector r = boys::boys_all(Complex(1.0, 0.0), 12);
  CHECK(r.scaled == false);
  CHECK(std::abs(r.values[0] - 0.74682413281242703) <= 1e-13);
  CHECK(r.values[12] == boys::fn_top_nonneg(Complex(1.0, 0.0)));  // seed passes through
}

TEST_CASE("scaled lowering case z = -1") {
  const boys::BoysVector r = boys::boys_all(Complex(-1.0, 0.0), 12);
  CHECK(r.scaled == true);
  CHECK(std::abs(r.values[0] - 0.53807950691276842) <= 1e-13);
}

TEST_CASE("raising case z = 10") {
  const boys::BoysVector r = boys::boys_all(Complex(10.0, 0.0), 12);
  CHECK(r.scaled == false);
  CHECK(r.values[0] == boys::f0_eval(Complex(10.0, 0.0)).value);  // seed passes through
  CHECK(std::abs(r.values[1] - 0.014010099528844013) <= 1e-14);
  CHECK(std::abs(r.values[12] - boys::oracle_boys(12, Complex(10.0, 0.0), false)) <= 1e-12);
}

TEST_CASE("scaled raising case z = -10") {
  const boys::BoysVector r = boys::boys_all(Complex(-10.0, 0.0), 12);
  CHECK(r.scaled == true);
  CHECK(r.values[0] == boys::f0_eval(Complex(-10.0, 0.0)).value);
  CHECK(std::abs(r.values[12] - boys::oracle_boys(12, Complex(-10.0, 0.0), true)) <= 1e-11);
}

TEST_CASE("direction switch near z*(12)") {
  const double z_star = boys::compute_z_star(12);
  CHECK(std::abs(z_star - 4.543) <= 1.1e-3);
  const boys::BoysVector fwd = boys::boys_all(Complex(z_star + 0.05, 0.0), 12);
  const boys::BoysVector bwd = boys::boys_all(Complex(z_star - 0.05, 0.0), 12);
  CHECK(fwd.values[0] == boys::f0_eval(Complex(z_star + 0.05, 0.0)).value);
  CHECK(bwd.values[12] == boys::fn_top_nonneg(Complex(z_star - 0.05, 0.0)));
  // the two engines meet in the middle
  for (int n = 0; n <= 12; ++n) {
    const Complex a = fwd.values[n];
    const Complex b = boys::oracle_boys(n, Complex(z_star + 0.05, 0.0), false);
    CHECK(std::abs(a - b) <= 1e-11 * std::max(1.0, std::abs(b)));
  }
}

TEST_CASE("truncation to a lower order keeps the same leading entries") {
  const boys::BoysVector full_b = boys::boys_all(Complex(1.0, 0.0), 12);
  const boys::BoysVector part_b = boys::boys_all(Complex(1.0, 0.0), 5);
  REQUIRE(part_b.values.size() == 6);
  CHECK(part_b.n_max == 5);
  for (int n = 0; n <= 5; ++n) CHECK(part_b.values[n] == full_b.values[n]);

  const boys::BoysVector full_f = boys::boys_all(Complex(10.0, 0.0), 12);
  const boys::BoysVector part_f = boys::boys_all(Complex(10.0, 0.0), 5);
  for (int n = 0; n <= 5; ++n) CHECK(part_f.values[n] == full_f.values[n]);
}

TEST_CASE("order zero") {
  const boys::BoysVector r = boys::boys_all(Complex(7.0, 0.0), 0);
  REQUIRE(r.values.size() == 1);
  CHECK(r.values[0] == boys::f0_eval(Complex(7.0, 0.0)).value);
}

TEST_CASE("raising sweep arithmetic at z = 2") {
  const boys::BoysVector r = boys::forward_sweep(Complex(1.0, 0.0), Complex(2.0, 0.0), 2, false);
  const Complex inv_z = 1.0 / Complex(2.0, 0.0);
  const Complex v = std::exp(-Complex(2.0, 0.0)) * (0.5 * inv_z);
  const Complex f1 = 0.5 * (inv_z * Complex(1.0, 0.0)) - v;
  const Complex f2 = 1.5 * (inv_z * f1) - v;
  CHECK(r.values[1] == f1);
  CHECK(r.values[2] == f2);
}

TEST_CASE("lowering sweep from an oracle seed") {
  const Complex z(0.5, 0.3);
  const boys::BoysVector r = boys::backward_sweep(boys::oracle_boys(3, z, false), z, 3, false);
  CHECK(std::abs(r.values[0] - boys::oracle_boys(0, z, false)) <= 5e-15);
}

TEST_CASE("asymptotic behavior at z = 400") {
  const boys::BoysVector r = boys::boys_all(Complex(400.0, 0.0), 12);
  const double lead0 = 0.5 * std::sqrt(std::numbers::pi / 400.0);
  CHECK(std::abs(r.values[0].real() / lead0 - 1.0) <= 1e-6);
  double gamma_12_5 = std::sqrt(std::numbers::pi);
  for (int j = 1; j <= 12; ++j) gamma_12_5 *= j - 0.5;
  const double lead12 = gamma_12_5 / (2.0 * std::pow(400.0, 12.5));
  CHECK(std::abs(r.values[12].real() / lead12 - 1.0) <= 1e-6);
}

TEST_CASE("domain contracts") {
  CHECK_THROWS_AS(boys::forward_sweep(Complex(1.0, 0.0), Complex(0.0, 0.0), 3, false),
                  std::domain_error);
  CHECK_THROWS_AS(boys::boys_all(Complex(1.0, 0.0), 13), std::domain_error);
  CHECK_THROWS_AS(boys::boys_all(Complex(1.0, 0.0), -1), std::domain_error);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(boys::boys_all(Complex(nan, 0.0), 12), std::domain_error);
  CHECK_THROWS_AS(boys::boys_all(Complex(inf, 0.0), 12), std::domain_error);
}

}  // TEST_SUITE
