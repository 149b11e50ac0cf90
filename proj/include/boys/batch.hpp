#pragma once

#include <cstddef>
#include <span>

#include "boys/types.hpp"

namespace boys {

// Full vectors for an array of points: out is row-major, n_max + 1
// entries per point; scaled[i] records whether point i returned
// e^z F values. out.size() must be zs.size() * (n_max + 1) and
// scaled.size() must be zs.size() (std::domain_error otherwise).
//
// The parallel version runs the same per-point kernel under OpenMP
// (serial when built without it) and produces bitwise-identical output
// to the serial reference.
void boys_all_batch(std::span<const Complex> zs, int n_max, std::span<Complex> out,
                    std::span<unsigned char> scaled);
void boys_all_batch_serial(std::span<const Complex> zs, int n_max, std::span<Complex> out,
                           std::span<unsigned char> scaled);

}  // namespace boys
