// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>

#include "tlwavelab/meyer.hpp"

namespace tlwavelab::fft {

/// In-place unnormalized DFT over a rank-`dim` cube of side `n` (row-major):
///   forward:  X_r = sum_k x_k e^{-2 pi i r.k / n}
///   backward: x_k = sum_r X_r e^{+2 pi i r.k / n}
/// Plans are cached; execution is thread-safe.
void forward(std::span<cplx> data, int dim, std::int64_t n);
void backward(std::span<cplx> data, int dim, std::int64_t n);

}  // namespace tlwavelab::fft
