#pragma once

#include <cmath>

#include "boys/types.hpp"

namespace boys::detail {

// Neumaier variant of Kahan summation: the correction also captures the
// case where the incoming term is larger than the running sum.
struct CompensatedSum {
  double s = 0.0;
  double c = 0.0;

  void add(double x) {
    const double t = s + x;
    if (std::abs(s) >= std::abs(x)) {
      c += (s - t) + x;
    } else {
      c += (x - t) + s;
    }
    s = t;
  }

  double value() const { return s + c; }
};

struct CompensatedComplexSum {
  CompensatedSum re;
  CompensatedSum im;

  void add(const Complex& x) {
    re.add(x.real());
    im.add(x.imag());
  }

  Complex value() const { return {re.value(), im.value()}; }
};

}  // namespace boys::detail
