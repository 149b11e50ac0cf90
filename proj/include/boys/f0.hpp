#pragma once

#include "boys/types.hpp"

namespace boys {

// q(xi) = (1 - e^{-xi})/xi, entire after removing the xi = 0 singularity.
// |xi| <= guard radius uses the degree-14 Taylor polynomial, whose
// remainder 0.5^15/15! is below 1e-16.
Complex q_eval(Complex xi);

// Principal-branch arctangent, (i/2) log((1 - iw)/(1 + iw)).
// Throws std::domain_error at the poles w = +-i.
Complex arctan_complex(Complex w);

// F(0,z) for Re(z) >= 0. Dispatch on |z|: 10-term Taylor below r0,
// 22-term pole sum up to 100, truncated asymptotic series beyond.
// Throws std::domain_error for Re(z) < 0.
Complex f0_nonneg(Complex z);

// e^z F(0,z) for Re(z) < 0. Dispatch on |z|: e^z times Taylor below r0,
// Gauss-Legendre plus arctangent tail up to 100 (shifted cutoff when z is
// within 1/2 of -t_max^2), scaled series beyond.
// Throws std::domain_error for Re(z) >= 0.
Complex f0_neg_scaled(Complex z);

// Sign-of-Re dispatch over the two functions above, reporting which
// region evaluated the point.
F0Result f0_eval(Complex z);

// Fresnel integrals C(y) = int_0^y cos(pi t^2/2) dt, S likewise with sin,
// obtained from y F(0, i (pi/2) y^2); both odd in y.
struct FresnelValue {
  double c = 0.0;
  double s = 0.0;
};

FresnelValue fresnel(double y);

}  // namespace boys
