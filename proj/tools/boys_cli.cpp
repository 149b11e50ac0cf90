#include <charconv>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "boys/boys.hpp"

namespace {

std::string fmt_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::scientific, 15);
  return std::string(buf, res.ptr);
}

// "A:B:STEP" inclusive arithmetic range, or a bare "A" single point.
// Empty or malformed ranges are domain errors (exit 3), not usage errors.
std::vector<double> parse_range(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  auto to_d = [&text](const std::string& tok) {
    double v = 0.0;
    const char* b = tok.data();
    const char* e = tok.data() + tok.size();
    const auto res = std::from_chars(b, e, v);
    if (res.ec != std::errc() || res.ptr != e || !std::isfinite(v)) {
      throw std::domain_error("bad number in range '" + text + "'");
    }
    return v;
  };
  if (parts.size() == 1) {
    return {to_d(parts[0])};
  }
  if (parts.size() != 3) {
    throw std::domain_error("range must be A:B:STEP or a single value, got '" + text + "'");
  }
  const double a = to_d(parts[0]);
  const double b = to_d(parts[1]);
  const double step = to_d(parts[2]);
  if (a == b) {
    return {a};
  }
  if (step <= 0.0 || b < a) {
    throw std::domain_error("empty range '" + text + "'");
  }
  const long count = static_cast<long>(std::floor((b - a) / step + 1e-9)) + 1;
  std::vector<double> out;
  out.reserve(count);
  for (long k = 0; k < count; ++k) {
    out.push_back(a + k * step);
  }
  return out;
}

const boys::ExpSumTable& pick_table(const std::string& path, boys::ExpSumTable& storage) {
  if (path.empty()) {
    return boys::expsum_table();
  }
  storage = boys::load_expsum_table(path);
  return storage;
}

void print_csv_rows(std::ostream& os, const boys::BoysVector& v) {
  for (int n = 0; n <= v.n_max; ++n) {
    os << fmt_double(v.z.real()) << ',' << fmt_double(v.z.imag()) << ',' << (v.scaled ? 1 : 0)
       << ',' << n << ',' << fmt_double(v.values[n].real()) << ','
       << fmt_double(v.values[n].imag()) << '\n';
  }
}

int cmd_eval(double re, double im, int nmax, const std::string& format,
             const std::string& table_path) {
  boys::ExpSumTable storage;
  const boys::ExpSumTable& table = pick_table(table_path, storage);
  const boys::BoysVector v = boys::boys_all(boys::Complex(re, im), nmax, table);
  if (format == "plain") {
    std::cout << "z = (" << fmt_double(re) << ", " << fmt_double(im) << ")\n";
    std::cout << "scaled = " << (v.scaled ? "true   [values are e^z F(n,z)]" : "false") << "\n";
    for (int n = 0; n <= nmax; ++n) {
      std::cout << "n=" << n << ": " << fmt_double(v.values[n].real()) << ' '
                << fmt_double(v.values[n].imag()) << '\n';
    }
  } else if (format == "json") {
    std::cout << "{\"z\":{\"re\":" << fmt_double(re) << ",\"im\":" << fmt_double(im) << "},"
              << "\"scaled\":" << (v.scaled ? "true" : "false") << ",\"values\":[";
    for (int n = 0; n <= nmax; ++n) {
      std::cout << (n ? "," : "") << "{\"n\":" << n << ",\"re\":" << fmt_double(v.values[n].real())
                << ",\"im\":" << fmt_double(v.values[n].imag()) << "}";
    }
    std::cout << "]}\n";
  } else if (format == "csv") {
    std::cout << "z_re,z_im,scaled,n,f_re,f_im\n";
    print_csv_rows(std::cout, v);
  } else {
    throw std::domain_error("unknown format '" + format + "'");
  }
  return 0;
}

int cmd_table(const std::string& re_range, const std::string& im_range, int nmax,
              const std::string& out_path, const std::string& table_path) {
  const std::vector<double> res = parse_range(re_range);
  const std::vector<double> ims = parse_range(im_range);
  boys::ExpSumTable storage;
  const boys::ExpSumTable& table = pick_table(table_path, storage);

  std::ofstream file;
  if (out_path != "-") {
    file.open(out_path);
    if (!file) {
      throw std::domain_error("cannot open output file '" + out_path + "'");
    }
  }
  std::ostream& os = (out_path == "-") ? std::cout : file;
  os << "z_re,z_im,scaled,n,f_re,f_im\n";
  for (double re : res) {
    for (double im : ims) {
      print_csv_rows(os, boys::boys_all(boys::Complex(re, im), nmax, table));
    }
  }
  return 0;
}

int cmd_fresnel(const std::string& y_single, const std::string& y_range) {
  std::vector<double> ys;
  if (!y_single.empty() && !y_range.empty()) {
    throw std::domain_error("give either --y or --y-range, not both");
  }
  if (!y_single.empty()) {
    ys = parse_range(y_single);
  } else if (!y_range.empty()) {
    ys = parse_range(y_range);
  } else {
    throw std::domain_error("one of --y or --y-range is required");
  }
  std::cout << "y,c,s\n";
  for (double y : ys) {
    const boys::FresnelValue f = boys::fresnel(y);
    std::cout << fmt_double(y) << ',' << fmt_double(f.c) << ',' << fmt_double(f.s) << '\n';
  }
  return 0;
}

int cmd_bench(std::uint64_t iters, std::uint64_t seed) {
  const boys::BenchReport br = boys::run_bench(iters, seed);
  std::printf("iters = %llu, seed = %llu (arguments in the pole-sum annulus)\n",
              static_cast<unsigned long long>(iters), static_cast<unsigned long long>(seed));
  std::printf("complex exp baseline : %10.2f ns/eval\n", br.ns_exp);
  std::printf("F(0,z) single        : %10.2f ns/eval\n", br.ns_f0);
  std::printf("boys_all vector      : %10.2f ns/eval\n", br.ns_vec);
  std::printf("boys_all_real vector : %10.2f ns/eval\n", br.ns_vec_real);
  std::printf("ratio F0/exp         : %10.2f\n", br.ratio);
  std::printf("checksum             : %s\n", fmt_double(br.checksum).c_str());
  return 0;
}

int cmd_selftest(bool quick) {
  const std::vector<boys::CheckResult> results = boys::run_selftest(quick);
  bool ok = true;
  for (const boys::CheckResult& r : results) {
    const char* tag = r.informational ? "INFO" : (r.pass ? "PASS" : "FAIL");
    std::printf("[%s] %-60s observed %10.3e  tol %9.3e  %s\n", tag, r.name.c_str(), r.observed,
                r.tol, r.detail.c_str());
    if (!r.pass && !r.informational) {
      ok = false;
    }
  }
  std::printf("%s\n", ok ? "selftest: all checks passed" : "selftest: FAILURES present");
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boys function F(n,z) evaluator: complex arguments, scaled "
               "negative-half-plane values, Fresnel integrals"};
  app.require_subcommand(1);

  auto* eval = app.add_subcommand("eval", "evaluate F(0..nmax, z) at one point");
  double re = 0.0, im = 0.0;
  int nmax = 12;
  std::string format = "plain";
  std::string table_path;
  eval->add_option("--re", re, "Re(z)");
  eval->add_option("--im", im, "Im(z)");
  eval->add_option("--nmax", nmax, "highest order n");
  eval->add_option("--format", format, "plain | json | csv");
  eval->add_option("--table", table_path, "exponential-sum table file")
      ->envname("BOYS_TABLE_PATH");

  auto* table = app.add_subcommand("table", "CSV grid of values");
  std::string re_range = "0", im_range = "0", out_path = "-";
  int t_nmax = 12;
  std::string t_table_path;
  table->add_option("--re-range", re_range, "A:B:STEP or single value");
  table->add_option("--im-range", im_range, "A:B:STEP or single value");
  table->add_option("--nmax", t_nmax, "highest order n");
  table->add_option("--out", out_path, "output file, - for stdout");
  table->add_option("--table", t_table_path, "exponential-sum table file")
      ->envname("BOYS_TABLE_PATH");

  auto* fresnel_cmd = app.add_subcommand("fresnel", "Fresnel integrals C(y), S(y)");
  std::string y_single, y_range;
  fresnel_cmd->add_option("--y", y_single, "single y value");
  fresnel_cmd->add_option("--y-range", y_range, "A:B:STEP");

  auto* bench = app.add_subcommand("bench", "nanoseconds-per-evaluation microbenchmark");
  std::uint64_t iters = 1000000, seed = 42;
  bench->add_option("--iters", iters, "evaluations per timed pass (capped at 2e6)");
  bench->add_option("--seed", seed, "argument generator seed");

  auto* selftest = app.add_subcommand("selftest", "acceptance checks + module invariants");
  bool quick = false;
  selftest->add_flag("--quick", quick, "reduced grids, runs in seconds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*eval) {
      return cmd_eval(re, im, nmax, format, table_path);
    }
    if (*table) {
      return cmd_table(re_range, im_range, t_nmax, out_path, t_table_path);
    }
    if (*fresnel_cmd) {
      return cmd_fresnel(y_single, y_range);
    }
    if (*bench) {
      return cmd_bench(iters, seed);
    }
    if (*selftest) {
      return cmd_selftest(quick);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
  return 2;
}
