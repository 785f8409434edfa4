// SPDX-License-Identifier: Apache-2.0
//
// Scripted experiments. Each returns a Report with named checks and CSV series;
// reports depend only on the options (seeded), never on timing or thread count.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tlwavelab/daubechies.hpp"
#include "tlwavelab/grid.hpp"
#include "tlwavelab/meyer.hpp"
#include "tlwavelab/report.hpp"
#include "tlwavelab/wavelet_grid.hpp"

namespace tlwavelab {

// Father tensor phi(x_1)...phi(x_D) against ever coarser mother scales.
struct InclusionOptions {
  int dim = 1;
  double q = 2.0;
  int j_floor = -9;
  double quad_tol = 1e-10;
};

Report inclusion_demo(const MeyerSystem& meyer, const InclusionOptions& opts);

// Lacunary sum f_m = sum_{i=1..m} Phi(2^{2i} x), Phi a shifted Daubechies scaling function.
struct LacunaryOptions {
  double q_prime = 2.0;
  std::vector<int> term_counts{1, 2, 3, 4, 5, 6, 7, 8};
  int order = 16;
  int levels = 12;
  int period_exp = 5;
  int grid_exp = 24;
  int samples_per_unit = 8;  // Nyquist guard: 2^j h <= 1 / samples_per_unit
};

/// C_D = int (-y / |y|^2) Phi0(y - 2^{M+1}) dy in D=1, from the cascade table.
double lacunary_sign_integral(const DaubechiesScaling& phi0, int shift_exp);

Report lacunary_demo(const MeyerSystem& meyer, const LacunaryOptions& opts);

struct RieszCharOptions {
  int dim = 1;
  int period_exp = 5;
  int grid_exp = 14;
  double q = 2.0;
  int trials = 50;
  std::uint64_t seed = 0;
  int jobs = 1;
  std::optional<double> budget;  // golden max/min budget for this configuration
};

/// r(f) = sum_{l=0..D} we1q(R_l f) / f01q(f) over random band-limited f.
Report riesz_char_check(const MeyerSystem& meyer, const RieszCharOptions& opts);

struct DualityOptions {
  int dim = 1;
  int period_exp = 5;
  int grid_exp = 14;
  double q = 2.0;
  int trials = 50;
  std::uint64_t seed = 0;
  int jobs = 1;
};

/// |<f,g>| against we1q(f) (linf(g) + f0infq'(g)); the empirical constant is taken
/// over `trials` pairs and again over twice as many.
Report duality_pairing_check(const MeyerSystem& meyer, const DualityOptions& opts);

struct FsDecomposition {
  GridFunction f0;
  std::vector<GridFunction> components;  // f_1..f_D
  Report report;
};

/// f = f_0 + sum_l R_l f_l with f_0 = 0 and f_l = -R_l f. Requires zero mean.
FsDecomposition trivial_fs_decomposition(const WaveletGrid& grid, const GridFunction& f,
                                         double q_prime);

}  // namespace tlwavelab
