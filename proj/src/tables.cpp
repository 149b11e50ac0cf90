#include "boys/tables.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <complex>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <system_error>

namespace boys {

namespace {

// 22-term pole expansion for F(0,z) on 0.35 < |z| < 100, Re(z) >= 0.
// Column 2 is v_m = w_m e^{-eta_m}; the v_m sum to 1.
constexpr int kF0Terms = 22;
constexpr double kF0Poles[kF0Terms] = {
    0.14778782637969565e-02, 0.13317276413725817e-01, 0.37063591452052541e-01,
    0.72752512422882762e-01, 0.12023694122878568e+00, 0.17957429395893773e+00,
    0.25353404698408727e+00, 0.35038865278072195e+00, 0.48210957593127668e+00,
    0.66302899315837416e+00, 0.91181473685659087e+00, 0.12539502287919293e+01,
    0.17244634233573395e+01, 0.23715248262781863e+01, 0.32613796996078355e+01,
    0.44851301690595911e+01, 0.61680621351224838e+01, 0.84824718723178698e+01,
    0.11665305486296793e+02, 0.16042417132288328e+02, 0.22061929518147089e+02,
    0.30340112094708307e+02,
};
constexpr double kF0Weights[kF0Terms] = {
    0.86643102720141654e-01, 0.85772060843439468e-01, 0.83935043682917876e-01,
    0.80966197041322921e-01, 0.76908954849297856e-01, 0.73155207871182168e-01,
    0.72695003516315720e-01, 0.75284255608930400e-01, 0.77094395364519633e-01,
    0.75425062567753040e-01, 0.68968619265031533e-01, 0.57444804221430223e-01,
    0.42081994346945442e-01, 0.25838539448223272e-01, 0.12445024157255560e-01,
    0.42925415925998368e-02, 0.93543429877359686e-03, 0.10840885466502505e-03,
    0.52718679667616736e-05, 0.77659740397504190e-07, 0.22138172422680093e-09,
    0.65941617600377069e-13,
};

// 13-term exponential sum for g(s) = (1-s)^{11.5}: five conjugate pairs
// followed by three real rows. Uniform error eps ~ 2.5e-13 on [0,1].
constexpr int kExpSumTerms = 13;
constexpr double kExpSumEps = 2.5e-13;
constexpr double kExpSumEta[kExpSumTerms][2] = {
    {0.70719431320570010e1, 0.16487291250752115e2},
    {0.70719431320570010e1, -0.16487291250752115e2},
    {-0.57143271715191635e0, 0.13278579453233633e2},
    {-0.57143271715191635e0, -0.13278579453233633e2},
    {-0.47193021330392506e1, 0.99835257112371032e1},
    {-0.47193021330392506e1, -0.99835257112371032e1},
    {-0.71704662772895089e1, 0.66712360839820768e1},
    {-0.71704662772895089e1, -0.66712360839820768e1},
    {-0.84899747054724699e1, 0.33434804168467491e1},
    {-0.84899747054724699e1, -0.33434804168467491e1},
    {0.36564414363150973e2, 0.0},
    {-0.32424239255921954e1, 0.0},
    {-0.89066047733100753e1, 0.0},
};
constexpr double kExpSumW[kExpSumTerms][2] = {
    {0.36443632402898501e-10, 0.26411751072107504e-10},
    {0.36443632402898501e-10, -0.26411751072107504e-10},
    {0.18185250346753633e-6, -0.21860458971399352e-5},
    {0.18185250346753633e-6, 0.21860458971399352e-5},
    {-0.99489169272055748e-3, -0.23049079105203073e-3},
    {-0.99489169272055748e-3, 0.23049079105203073e-3},
    {-0.25625216985879006e-1, 0.35818335274876982e-1},
    {-0.25625216985879006e-1, -0.35818335274876982e-1},
    {0.16506801544880723e0, 0.32273964471776045e0},
    {0.16506801544880723e0, -0.32273964471776045e0},
    {-0.20104641661565164e-25, 0.0},
    {-0.39563536955042078e-3, 0.0},
    {0.72349945805085292e0, 0.0},
};

// Fills the precomputed per-term factors and detects the conjugate-pair
// layout used by the real-argument path.
void finalize(ExpSumTable& t) {
  const int M = t.M;
  t.exp_eta.resize(M);
  t.exp_neg_eta.resize(M);
  t.w_exp_eta.resize(M);
  for (int m = 0; m < M; ++m) {
    t.exp_eta[m] = std::exp(t.eta[m]);
    t.exp_neg_eta[m] = std::exp(-t.eta[m]);
    t.w_exp_eta[m] = t.w[m] * t.exp_eta[m];
  }

  t.pair_idx.clear();
  t.real_idx.clear();
  t.pairs_valid = true;
  std::vector<bool> used(M, false);
  for (int m = 0; m < M && t.pairs_valid; ++m) {
    if (used[m]) continue;
    if (t.eta[m].imag() == 0.0 && t.w[m].imag() == 0.0) {
      t.real_idx.push_back(m);
      used[m] = true;
      continue;
    }
    bool matched = false;
    for (int k = m + 1; k < M; ++k) {
      if (!used[k] && t.eta[k] == std::conj(t.eta[m]) && t.w[k] == std::conj(t.w[m])) {
        t.pair_idx.push_back(t.eta[m].imag() > 0.0 ? m : k);
        used[m] = used[k] = true;
        matched = true;
        break;
      }
    }
    if (!matched) t.pairs_valid = false;
  }
  if (!t.pairs_valid) {
    t.pair_idx.clear();
    t.real_idx.clear();
  }
}

double expsum_residual(const ExpSumTable& t, int samples) {
  const double power = t.n_max - 0.5;
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double s = static_cast<double>(i) / (samples - 1);
    Complex sum = 0.0;
    for (int m = 0; m < t.M; ++m) {
      sum += t.w[m] * std::exp(t.eta[m] * s);
    }
    const double g = std::pow(1.0 - s, power);
    worst = std::max(worst, std::abs(sum - g));
  }
  return worst;
}

void format_double(std::string& line, double v) {
  char buf[40];
  // 17 significant digits in scientific notation round-trips bit-exactly.
  auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::scientific, 16);
  line.append(buf, res.ptr);
}

double parse_double(std::istream& in, const char* what) {
  std::string tok;
  if (!(in >> tok)) {
    throw std::runtime_error(std::string("table parse error: missing ") + what);
  }
  double v = 0.0;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size()) {
    throw std::runtime_error(std::string("table parse error: bad number for ") + what + ": " + tok);
  }
  return v;
}

long parse_int(std::istream& in, const char* what) {
  std::string tok;
  if (!(in >> tok)) {
    throw std::runtime_error(std::string("table parse error: missing ") + what);
  }
  long v = 0;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size()) {
    throw std::runtime_error(std::string("table parse error: bad integer for ") + what + ": " + tok);
  }
  return v;
}

}  // namespace

F0QuadTable build_f0_table() {
  F0QuadTable t;
  t.poles.assign(kF0Poles, kF0Poles + kF0Terms);
  t.weights.assign(kF0Weights, kF0Weights + kF0Terms);
  t.eps_quad = 1e-13;
  t.eps_tail = 5.9e-18;

  double sum = 0.0;
  for (double v : t.weights) sum += v;
  if (std::abs(sum - 1.0) > 1e-12) {
    throw std::logic_error("build_f0_table: weight sum is off, table transcription is corrupt");
  }
  return t;
}

const F0QuadTable& f0_table() {
  static const F0QuadTable t = build_f0_table();
  return t;
}

ExpSumTable build_expsum_table(int n_max) {
  if (n_max != 12) {
    throw std::domain_error("no approximation table for n_max = " + std::to_string(n_max) +
                            "; supply a table file");
  }
  ExpSumTable t;
  t.n_max = 12;
  t.M = kExpSumTerms;
  t.eps = kExpSumEps;
  t.eta.resize(t.M);
  t.w.resize(t.M);
  for (int m = 0; m < t.M; ++m) {
    t.eta[m] = Complex(kExpSumEta[m][0], kExpSumEta[m][1]);
    t.w[m] = Complex(kExpSumW[m][0], kExpSumW[m][1]);
  }
  finalize(t);
  return t;
}

const ExpSumTable& expsum_table() {
  static const ExpSumTable t = build_expsum_table(12);
  return t;
}

ExpSumTable parse_expsum_table(std::istream& in) {
  ExpSumTable t;
  const long n_max = parse_int(in, "n_max");
  const long M = parse_int(in, "M");
  t.eps = parse_double(in, "eps");
  if (n_max < 7 || n_max > 64) {
    throw std::runtime_error("table parse error: n_max out of range: " + std::to_string(n_max));
  }
  if (M < 1 || M > 4096) {
    throw std::runtime_error("table parse error: M out of range: " + std::to_string(M));
  }
  if (!(t.eps > 0.0) || t.eps > 1e-2) {
    throw std::runtime_error("table parse error: eps out of range");
  }
  t.n_max = static_cast<int>(n_max);
  t.M = static_cast<int>(M);
  t.eta.resize(t.M);
  t.w.resize(t.M);
  for (int m = 0; m < t.M; ++m) {
    const double er = parse_double(in, "eta_re");
    const double ei = parse_double(in, "eta_im");
    const double wr = parse_double(in, "w_re");
    const double wi = parse_double(in, "w_im");
    t.eta[m] = Complex(er, ei);
    t.w[m] = Complex(wr, wi);
  }
  std::string rest;
  if (in >> rest) {
    throw std::runtime_error("table parse error: trailing content: " + rest);
  }

  const double residual = expsum_residual(t, 10000);
  if (residual > 10.0 * t.eps) {
    std::ostringstream msg;
    msg << "table validation failed: residual " << residual << " exceeds 10*eps = " << 10.0 * t.eps;
    throw std::runtime_error(msg.str());
  }
  finalize(t);
  return t;
}

ExpSumTable load_expsum_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open table file: " + path);
  }
  return parse_expsum_table(in);
}

void write_expsum_table(const ExpSumTable& t, std::ostream& out) {
  std::string line;
  line += std::to_string(t.n_max);
  line += ' ';
  line += std::to_string(t.M);
  line += ' ';
  format_double(line, t.eps);
  line += '\n';
  for (int m = 0; m < t.M; ++m) {
    format_double(line, t.eta[m].real());
    line += ' ';
    format_double(line, t.eta[m].imag());
    line += ' ';
    format_double(line, t.w[m].real());
    line += ' ';
    format_double(line, t.w[m].imag());
    line += '\n';
  }
  out << line;
}

}  // namespace boys
