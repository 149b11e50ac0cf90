#include "boys/batch.hpp"

#include <cstring>
#include <stdexcept>

#include "boys/recursion.hpp"
#include "boys/tables.hpp"

namespace boys {

namespace {

void check_shapes(std::span<const Complex> zs, int n_max, std::span<Complex> out,
                  std::span<unsigned char> scaled) {
  if (n_max < 0) {
    throw std::domain_error("batch evaluation requires n_max >= 0");
  }
  if (out.size() != zs.size() * static_cast<std::size_t>(n_max + 1)) {
    throw std::domain_error("batch output span has wrong size");
  }
  if (scaled.size() != zs.size()) {
    throw std::domain_error("batch scaled span has wrong size");
  }
}

void eval_point(Complex z, int n_max, const ExpSumTable& table, Complex* row,
                unsigned char* scaled) {
  const BoysVector v = boys_all(z, n_max, table);
  std::memcpy(row, v.values.data(), sizeof(Complex) * (n_max + 1));
  *scaled = v.scaled ? 1 : 0;
}

}  // namespace

void boys_all_batch_serial(std::span<const Complex> zs, int n_max, std::span<Complex> out,
                           std::span<unsigned char> scaled) {
  check_shapes(zs, n_max, out, scaled);
  const ExpSumTable& table = expsum_table();
  const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(zs.size());
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    eval_point(zs[i], n_max, table, out.data() + i * (n_max + 1), scaled.data() + i);
  }
}

void boys_all_batch(std::span<const Complex> zs, int n_max, std::span<Complex> out,
                    std::span<unsigned char> scaled) {
  check_shapes(zs, n_max, out, scaled);
  const ExpSumTable& table = expsum_table();
  const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(zs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    eval_point(zs[i], n_max, table, out.data() + i * (n_max + 1), scaled.data() + i);
  }
}

}  // namespace boys
