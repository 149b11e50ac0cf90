#include <chrono>
#include <cstdio>
#include <cstring>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "boys/batch.hpp"

namespace {

double time_ms(void (*fn)(std::span<const boys::Complex>, int, std::span<boys::Complex>,
                          std::span<unsigned char>),
               std::span<const boys::Complex> zs, std::span<boys::Complex> out,
               std::span<unsigned char> scaled) {
  double best = 1e300;
  for (int rep = 0; rep < 5; ++rep) {
    const auto t0 = std::chrono::steady_clock::now();
    fn(zs, 12, out, scaled);
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t n = 200000;
  if (argc > 1) {
    n = static_cast<std::size_t>(std::strtoull(argv[1], nullptr, 10));
  }
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ur(0.01, 300.0);
  std::uniform_real_distribution<double> uth(0.0, 6.283185307179586);
  std::vector<boys::Complex> zs(n);
  for (boys::Complex& z : zs) {
    z = std::polar(ur(rng), uth(rng));
  }
  std::vector<boys::Complex> out_serial(n * 13), out_parallel(n * 13);
  std::vector<unsigned char> sc_serial(n), sc_parallel(n);

  const double t_serial = time_ms(boys::boys_all_batch_serial, zs, out_serial, sc_serial);
  const double t_parallel = time_ms(boys::boys_all_batch, zs, out_parallel, sc_parallel);

  const bool identical =
      std::memcmp(out_serial.data(), out_parallel.data(), n * 13 * sizeof(boys::Complex)) == 0 &&
      std::memcmp(sc_serial.data(), sc_parallel.data(), n) == 0;

#ifdef _OPENMP
  const int threads = omp_get_max_threads();
#else
  const int threads = 1;
#endif
  std::printf("points               : %zu (full vectors, n_max = 12)\n", n);
  std::printf("serial reference     : %10.2f ms  (%.1f ns/point)\n", t_serial,
              1e6 * t_serial / n);
  std::printf("parallel (%2d threads): %10.2f ms  (%.1f ns/point)\n", threads, t_parallel,
              1e6 * t_parallel / n);
  std::printf("speedup              : %10.2fx\n", t_serial / t_parallel);
  std::printf("outputs bitwise equal: %s\n", identical ? "yes" : "NO");
  return identical ? 0 : 1;
}
