#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "boys/tables.hpp"
#include "doctest.h"

using boys::Complex;
using boys::ExpSumTable;
using boys::F0QuadTable;

TEST_SUITE("tables") {

TEST_CASE("pole table shape and endpoint digits") {
  const F0QuadTable& t = boys::f0_table();
  REQUIRE(t.poles.size() == 22);
  REQUIRE(t.weights.size() == 22);
  CHECK(t.poles.front() == 0.14778782637969565e-02);
  CHECK(t.poles.back() == 0.30340112094708307e+02);
  for (std::size_t m = 0; m < 22; ++m) {
    CHECK(t.poles[m] > 0.0);
    CHECK(t.weights[m] > 0.0);
    if (m + 1 < 22) {
      CHECK(t.poles[m] < t.poles[m + 1]);
    }
  }
  CHECK(t.eps_quad == 1e-13);
  CHECK(t.eps_tail == 5.9e-18);
}

TEST_CASE("pole weights sum to one") {
  const F0QuadTable& t = boys::f0_table();
  double s = 0.0, c = 0.0;
  for (double w : t.weights) {  // Neumaier
    const double y = s + w;
    c += (std::abs(s) >= std::abs(w)) ? (s - y) + w : (w - y) + s;
    s = y;
  }
  CHECK(std::abs((s + c) - 1.0) <= 1e-12);
}

TEST_CASE("weight column decays monotonically from entry nine") {
  const F0QuadTable& t = boys::f0_table();
  for (std::size_t m = 8; m + 1 < t.weights.size(); ++m) {
    CHECK(t.weights[m + 1] < t.weights[m]);
  }
}

TEST_CASE("exponential-sum table structure") {
  const ExpSumTable& t = boys::expsum_table();
  CHECK(t.n_max == 12);
  CHECK(t.M == 13);
  CHECK(t.eps == 2.5e-13);
  REQUIRE(t.eta.size() == 13);
  REQUIRE(t.w.size() == 13);
  CHECK(t.pairs_valid);
  REQUIRE(t.pair_idx.size() == 5);
  REQUIRE(t.real_idx.size() == 3);
  for (int m : t.pair_idx) {
    CHECK(t.eta[m].imag() > 0.0);
    bool partner = false;
    for (int k = 0; k < t.M; ++k) {
      if (k != m && t.eta[k] == std::conj(t.eta[m]) && t.w[k] == std::conj(t.w[m])) {
        partner = true;
      }
    }
    CHECK(partner);
  }
  for (int m : t.real_idx) {
    CHECK(t.eta[m].imag() == 0.0);
    CHECK(t.w[m].imag() == 0.0);
  }
}

TEST_CASE("per-term exponentials are consistent") {
  const ExpSumTable& t = boys::expsum_table();
  for (int m = 0; m < t.M; ++m) {
    CHECK(t.exp_eta[m] == std::exp(t.eta[m]));
    CHECK(t.exp_neg_eta[m] == std::exp(-t.eta[m]));
    CHECK(t.w_exp_eta[m] == t.w[m] * t.exp_eta[m]);
  }
}

TEST_CASE("write then parse reproduces every bit") {
  const ExpSumTable& t = boys::expsum_table();
  std::stringstream ss;
  boys::write_expsum_table(t, ss);
  const ExpSumTable back = boys::parse_expsum_table(ss);
  CHECK(back.n_max == t.n_max);
  CHECK(back.M == t.M);
  CHECK(back.eps == t.eps);
  for (int m = 0; m < t.M; ++m) {
    CHECK(back.eta[m] == t.eta[m]);
    CHECK(back.w[m] == t.w[m]);
  }
  CHECK(back.pairs_valid == t.pairs_valid);
  CHECK(back.pair_idx == t.pair_idx);
  CHECK(back.real_idx == t.real_idx);
}

TEST_CASE("file round trip through load_expsum_table") {
  const ExpSumTable& t = boys::expsum_table();
  const std::string path = "expsum_roundtrip.tbl";
  {
    std::ofstream out(path);
    REQUIRE(out.good());
    boys::write_expsum_table(t, out);
  }
  const ExpSumTable back = boys::load_expsum_table(path);
  for (int m = 0; m < t.M; ++m) {
    CHECK(back.eta[m] == t.eta[m]);
    CHECK(back.w[m] == t.w[m]);
  }
  std::remove(path.c_str());
}

TEST_CASE("parse rejects malformed input") {
  {
    std::stringstream ss("12 13");  // truncated header
    CHECK_THROWS_AS(boys::parse_expsum_table(ss), std::runtime_error);
  }
  {
    std::stringstream ss("12 2 1e-13\n1.0 2.0 3.0 nonsense\n1.0 2.0 3.0 4.0\n");
    CHECK_THROWS_AS(boys::parse_expsum_table(ss), std::runtime_error);
  }
  {
    std::stringstream ss("12 2 1e-13\n1.0 2.0 3.0 4.0\n");  // missing row
    CHECK_THROWS_AS(boys::parse_expsum_table(ss), std::runtime_error);
  }
  {
    std::stringstream ss("90 1 1e-13\n1.0 2.0 3.0 4.0\n");  // n_max out of range
    CHECK_THROWS_AS(boys::parse_expsum_table(ss), std::runtime_error);
  }
  {
    std::stringstream ss("12 1 0\n1.0 2.0 3.0 4.0\n");  // eps out of range
    CHECK_THROWS_AS(boys::parse_expsum_table(ss), std::runtime_error);
  }
}

TEST_CASE("parse rejects a table whose residual betrays corruption") {
  ExpSumTable t = boys::expsum_table();
  t.w[0] += 1e-3;
  std::stringstream ss;
  boys::write_expsum_table(t, ss);
  CHECK_THROWS_WITH_AS(boys::parse_expsum_table(ss),
                       doctest::Contains("table validation failed"), std::runtime_error);
}

TEST_CASE("only the shipped order is embedded") {
  CHECK_THROWS_AS(boys::build_expsum_table(10), std::domain_error);
  CHECK_THROWS_AS(boys::build_expsum_table(64), std::domain_error);
  CHECK(boys::build_expsum_table(12).M == 13);
}

}  // TEST_SUITE
