// SPDX-License-Identifier: Apache-2.0
//
// Property suites behind the `wavelet` and `verify` commands.
#pragma once

#include <cstdint>

#include "tlwavelab/meyer.hpp"
#include "tlwavelab/report.hpp"

namespace tlwavelab {

struct WaveletSuiteOptions {
  double quad_tol = 1e-10;
  int samples = 10000;
};

Report wavelet_suite(const MeyerSystem& meyer, const WaveletSuiteOptions& opts = {});

/// xi, Phi, m_phi, Re psi_hat, Im psi_hat on `count` points of [-xi_max, xi_max].
Series wavelet_table(const MeyerSystem& meyer, double xi_max = 3 * kPi, int count = 1201);

struct VerifyOptions {
  int dim = 1;
  int period_exp = 5;
  int grid_exp = 14;
  std::uint64_t seed = 0;
  double quad_tol = 1e-10;
  int parseval_trials = 50;
  int gram_pairs = 200;
  int near_diagonal_pairs = 100;
  int square_sum_trials = 100;
  int projection_trials = 10;

  /// Desk-scale defaults: D=1 on L=2^5, N=2^14; D=2 on L=2^3, N=2^9.
  static VerifyOptions defaults(int dim);
};

/// Orthonormality, Parseval, reconstruction, near-diagonality, the Riesz
/// square-sum identity, father-space bounds.
Report verify_suite(const MeyerSystem& meyer, const VerifyOptions& opts);

}  // namespace tlwavelab
