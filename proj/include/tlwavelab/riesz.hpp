// SPDX-License-Identifier: Apache-2.0
//
// Riesz transforms as Fourier multipliers -i xi_l / |xi| on the torus. The
// zero frequency is mapped to 0 (functions are taken modulo constants);
// component 0 is the identity.
#pragma once

#include <cstdint>

#include "tlwavelab/grid.hpp"
#include "tlwavelab/stats.hpp"
#include "tlwavelab/wavelet_grid.hpp"

namespace tlwavelab {

/// Symbol of R_ell at the lattice frequency m (ell = 0: identity).
cplx riesz_symbol(int ell, const IndexVec& m, int dim);

void riesz_apply_spectrum(int ell, SpectralFunction& s);
GridFunction riesz_apply(int ell, const GridFunction& f);

/// sum_{l=1}^D R_l R_l f. Throws if the zero-frequency coefficient of f is
/// not negligible (|F_0| > 1e-12 max |F_m|), since the identity with -f
/// cannot hold for the constant mode.
GridFunction riesz_square_sum(const GridFunction& f);

struct NearDiagonalResult {
  double max_abs = 0.0;
  std::size_t pairs = 0;  // (index, index', l) triples evaluated
};

/// max |(R_l psi_{j,k}, psi~_{jt,k~})| over `sample_count` random pairs with
/// k~ = 2^{jt-j} k + offset, offset in [-4, 4]^D, all l in {0..D}.
NearDiagonalResult near_diagonal_gram(const WaveletGrid& grid, int j, int jt, int sample_count,
                                      std::uint64_t seed);

/// f01q(R_l f) / f01q(f) over random band-limited f and l = 1..D.
RatioStats riesz_bounded_ratio(const WaveletGrid& grid, double q, int trials, std::uint64_t seed);

}  // namespace tlwavelab
