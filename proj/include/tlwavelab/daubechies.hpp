// SPDX-License-Identifier: Apache-2.0
//
// Daubechies orthonormal scaling functions (extremal phase) by spectral
// factorization of the binomial polynomial and cascade refinement.
#pragma once

#include <vector>

namespace tlwavelab {

struct DaubechiesFilter {
  int order = 0;           // vanishing moments p; 2p taps
  std::vector<double> h;   // low-pass taps, sum sqrt(2)

  static DaubechiesFilter make(int order);
  /// max_m |sum_k h_k h_{k+2m} - delta_{m0}|.
  double orthogonality_error() const;
};

/// Samples of phi on [0, 2p-1] at spacing 2^{-levels}.
struct DaubechiesScaling {
  DaubechiesFilter filter;
  int levels = 0;
  std::vector<double> values;      // values[i] = phi(i * step)
  std::vector<double> refinement;  // per level, sup |new sample - linear interpolant|

  double step() const;
  double support_length() const { return 2.0 * filter.order - 1.0; }
  /// Cubic Lagrange interpolation of the samples; zero outside the support.
  double operator()(double x) const;
};

/// Cascade from exact integer values (eigenvector of sqrt2 h_{2i-k}) refined
/// dyadically `levels` times. Requires order >= 10 and levels >= 8; throws
/// std::runtime_error if the per-level refinement residual stops decreasing.
DaubechiesScaling daubechies_scaling(int order, int levels);

/// Same cascade without the argument checks (for negative controls).
DaubechiesScaling daubechies_cascade(int order, int levels);

}  // namespace tlwavelab
