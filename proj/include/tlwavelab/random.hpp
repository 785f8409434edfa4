// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "tlwavelab/grid.hpp"

namespace tlwavelab {

using Rng = std::mt19937_64;

/// Sub-seed for a named job, so that experiments do not share streams.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view job);

/// Largest |m_l| that every analysis window on `spec` reconstructs exactly:
/// (2/3) 2^{j_hi + P}.
std::int64_t band_limit(const GridSpec& spec);

struct BandLimitedOptions {
  bool real_valued = true;   // Hermitian spectrum
  bool zero_mean = true;     // F_0 = 0
  double decay = 1.0;        // amplitude ~ (1 + |m|/m0)^{-decay}
  double band_fraction = 1.0;  // fraction of band_limit actually used
};

/// Random trigonometric polynomial with Gaussian coefficients, frequencies
/// |m_l| <= band_fraction * band_limit(spec), Nyquist bins empty.
SpectralFunction random_band_limited_spectrum(const GridSpec& spec, Rng& rng,
                                              const BandLimitedOptions& opts = {});
GridFunction random_band_limited(const GridSpec& spec, Rng& rng,
                                 const BandLimitedOptions& opts = {});

/// `count` random mother entries with Gaussian values at scales [lo, hi].
CoefficientField random_mother_field(const GridSpec& spec, Rng& rng, std::size_t count, int lo,
                                     int hi);

/// Uniformly random wavelet index (mother, or father at j_lo) on `spec`.
WaveletIndex random_index(const GridSpec& spec, Rng& rng, bool allow_father = true);

}  // namespace tlwavelab
