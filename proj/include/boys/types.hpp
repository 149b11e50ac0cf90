#pragma once

#include <complex>
#include <vector>

namespace boys {

using Complex = std::complex<double>;

// Values F(0..n_max, z), or e^z F(0..n_max, z) when scaled is true.
// The scaled form is used for Re(z) < 0, where F itself grows like e^{-z}.
struct BoysVector {
  std::vector<Complex> values;
  Complex z{};
  bool scaled = false;
  int n_max = 0;
};

enum class F0Region {
  Taylor,
  PoleSum,
  GLArctan,
  GLArctanShifted,
  LargeSeries,
  LargeSeriesScaled,
};

struct F0Result {
  Complex value;
  bool scaled = false;
  F0Region region = F0Region::Taylor;
};

}  // namespace boys
