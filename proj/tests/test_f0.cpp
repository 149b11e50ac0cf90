#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "boys/constants.hpp"
#include "boys/f0.hpp"
#include "boys/oracle.hpp"
#include "boys/types.hpp"
#include "doctest.h"

using boys::Complex;
using boys::F0Region;

TEST_SUITE("f0") {

TEST_CASE("q at distinguished points") {
  CHECK(boys::q_eval(Complex(0.0, 0.0)) == Complex(1.0, 0.0));
  CHECK(std::abs(boys::q_eval(Complex(1.0, 0.0)) - (1.0 - std::exp(-1.0))) <= 5e-16);
}

TEST_CASE("q Taylor branch matches the direct formula") {
  for (Complex xi : {Complex(0.1, 0.0), Complex(0.3, 0.2), Complex(-0.2, 0.35), Complex(0.0, 0.45)}) {
    const Complex direct = (1.0 - std::exp(-xi)) / xi;
    CHECK(std::abs(boys::q_eval(xi) - direct) <= 1e-15);
  }
}

TEST_CASE("q branches agree on the guard circle itself") {
  for (double th : {0.0, 1.0, 2.5, 4.0}) {
    const Complex xi = std::polar(0.5, th);  // |xi| = guard radius, Taylor side
    const Complex direct = (1.0 - std::exp(-xi)) / xi;
    CHECK(std::abs(boys::q_eval(xi) - direct) <= 1e-15);
  }
}

TEST_CASE("complex arctangent") {
  CHECK(boys::arctan_complex(Complex(0.0, 0.0)) == Complex(0.0, 0.0));
  CHECK(std::abs(boys::arctan_complex(Complex(1.0, 0.0)) - std::numbers::pi / 4) <= 5e-16);
  const Complex at_half_i = boys::arctan_complex(Complex(0.0, 0.5));
  CHECK(std::abs(at_half_i - Complex(0.0, 0.5493061443340549)) <= 5e-16);
  CHECK(std::abs(boys::arctan_complex(Complex(2.0, 1.0)) -
                 Complex(1.1780972450961724, 0.17328679513998632)) <= 1e-15);
  CHECK_THROWS_AS(boys::arctan_complex(Complex(0.0, 1.0)), std::domain_error);
  CHECK_THROWS_AS(boys::arctan_complex(Complex(0.0, -1.0)), std::domain_error);
}

TEST_CASE("F(0,z) point values") {
  CHECK(boys::f0_nonneg(Complex(0.0, 0.0)) == Complex(1.0, 0.0));
  CHECK(std::abs(boys::f0_nonneg(Complex(1.0, 0.0)) - 0.74682413281242703) <= 1e-15);
  CHECK(std::abs(boys::f0_nonneg(Complex(10.0, 0.0)) - 0.28024739050664274) <= 1e-14);
  CHECK(std::abs(boys::f0_neg_scaled(Complex(-1.0, 0.0)) - 0.53807950691276842) <= 1e-15);
}

TEST_CASE("scaled value tends to one as z -> 0-") {
  CHECK(std::abs(boys::f0_neg_scaled(Complex(-1e-14, 0.0)) - 1.0) <= 1e-13);
}

TEST_CASE("region dispatch") {
  const double t_max_sq = boys::region_params().t_max_sq;
  CHECK(boys::f0_eval(Complex(0.1, 0.0)).region == F0Region::Taylor);
  CHECK(boys::f0_eval(Complex(0.0, 0.35)).region == F0Region::Taylor);  // boundary inclusive
  CHECK(boys::f0_eval(Complex(1.0, 0.0)).region == F0Region::PoleSum);
  CHECK(boys::f0_eval(Complex(0.0, 200.0)).region == F0Region::LargeSeries);
  CHECK(boys::f0_eval(Complex(100.0, 0.0)).region == F0Region::LargeSeries);  // boundary inclusive
  CHECK(boys::f0_eval(Complex(-0.2, 0.1)).region == F0Region::Taylor);
  CHECK(boys::f0_eval(Complex(-50.0, 0.1)).region == F0Region::GLArctan);
  CHECK(boys::f0_eval(Complex(-t_max_sq + 0.1, 0.0)).region == F0Region::GLArctanShifted);
  CHECK(boys::f0_eval(Complex(-t_max_sq, 0.5)).region == F0Region::GLArctanShifted);
  CHECK(boys::f0_eval(Complex(-t_max_sq, 0.51)).region == F0Region::GLArctan);
  CHECK(boys::f0_eval(Complex(-150.0, 0.0)).region == F0Region::LargeSeriesScaled);
  CHECK(boys::f0_eval(Complex(3.0, 4.0)).scaled == false);
  CHECK(boys::f0_eval(Complex(-3.0, 4.0)).scaled == true);
}

TEST_CASE("half-plane contracts") {
  CHECK_THROWS_AS(boys::f0_nonneg(Complex(-1.0, 0.0)), std::domain_error);
  CHECK_THROWS_AS(boys::f0_neg_scaled(Complex(1.0, 0.0)), std::domain_error);
  CHECK_THROWS_AS(boys::f0_neg_scaled(Complex(0.0, 2.0)), std::domain_error);
}

TEST_CASE("conjugate symmetry") {
  for (Complex z : {Complex(2.0, 3.0), Complex(0.2, 0.1), Complex(40.0, 120.0)}) {
    CHECK(std::abs(boys::f0_nonneg(std::conj(z)) - std::conj(boys::f0_nonneg(z))) <= 1e-15);
    const Complex zn = -std::conj(z);
    CHECK(std::abs(boys::f0_neg_scaled(std::conj(zn)) - std::conj(boys::f0_neg_scaled(zn))) <=
          1e-15);
  }
}

TEST_CASE("modulus never exceeds F(0,0) = 1 on the right half-plane") {
  for (double r : {0.01, 0.3, 1.0, 30.0, 250.0}) {
    for (double th : {-1.4, -0.7, 0.0, 0.7, 1.4}) {
      CHECK(std::abs(boys::f0_nonneg(std::polar(r, th))) <= 1.0 + 1e-14);
    }
  }
}

TEST_CASE("shifted-cutoff switch point agrees with the oracle") {
  const double t_max_sq = boys::region_params().t_max_sq;
  for (Complex z : {Complex(-t_max_sq, 0.0), Complex(-t_max_sq + 0.3, 0.2),
                    Complex(-t_max_sq - 0.49, 0.0), Complex(-t_max_sq, -0.4)}) {
    CHECK(std::abs(boys::f0_neg_scaled(z) - boys::oracle_boys(0, z, true)) <= 1e-12);
  }
}

TEST_CASE("series region agrees with the oracle on both sides") {
  CHECK(std::abs(boys::f0_nonneg(std::polar(150.0, 0.3)) -
                 boys::oracle_boys(0, std::polar(150.0, 0.3), false)) <= 1e-12);
  const Complex zn = std::polar(150.0, 3.0);
  CHECK(std::abs(boys::f0_neg_scaled(zn) - boys::oracle_boys(0, zn, true)) <= 1e-12);
}

TEST_CASE("Fresnel values") {
  const boys::FresnelValue at0 = boys::fresnel(0.0);
  CHECK(at0.c == 0.0);
  CHECK(at0.s == 0.0);
  const boys::FresnelValue at1 = boys::fresnel(1.0);
  CHECK(std::abs(at1.c - 0.77989340037682283) <= 1e-12);
  CHECK(std::abs(at1.s - 0.43825914739035477) <= 1e-12);
  const boys::FresnelValue at20 = boys::fresnel(20.0);
  CHECK(std::abs(at20.c - 0.5) <= 0.02);
  CHECK(std::abs(at20.s - 0.5) <= 0.02);
}

TEST_CASE("Fresnel integrals are odd") {
  for (double y : {0.25, 1.0, 3.5, 17.0}) {
    const boys::FresnelValue plus = boys::fresnel(y);
    const boys::FresnelValue minus = boys::fresnel(-y);
    CHECK(minus.c == -plus.c);
    CHECK(minus.s == -plus.s);
  }
}

}  // TEST_SUITE
