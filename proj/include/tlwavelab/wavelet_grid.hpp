// SPDX-License-Identifier: Apache-2.0
//
// Frequency-domain analysis and synthesis against the periodized Meyer system.
// The Fourier series coefficients of psi^lambda_{j,k} on the torus are
//   c_m = (2pi)^{D/2} L^{-D} 2^{-Dj/2} Psi^lambda(2 pi m / K) e^{-2 pi i m.k / K},
// K = 2^{j+P}, so a channel is a pointwise product with Psi^lambda followed
// by folding m mod K and a K^D-point DFT.
#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <utility>
#include <vector>

#include "tlwavelab/grid.hpp"
#include "tlwavelab/meyer.hpp"

namespace tlwavelab {

class WaveletGrid {
 public:
  WaveletGrid(std::shared_ptr<const MeyerSystem> meyer, const GridSpec& spec);

  const GridSpec& spec() const { return spec_; }
  const MeyerSystem& meyer() const { return *meyer_; }
  std::shared_ptr<const MeyerSystem> meyer_ptr() const { return meyer_; }

  struct AxisFactor {
    std::int64_t m;  // signed frequency index
    cplx value;      // Phi or psi_hat at 2 pi m / K
  };
  /// Nonzero one-dimensional factors of a channel at scale j along one axis,
  /// restricted to the representable frequencies [-N/2, N/2).
  /// Cached; the returned list stays valid for the lifetime of the grid.
  const std::vector<AxisFactor>& axis_factors(bool mother, int j) const;

  /// Full analysis: father channel at j_lo plus every mother channel in the
  /// window. Channels that come out identically zero are omitted.
  CoefficientField analyze(const GridFunction& f) const;
  CoefficientField analyze(const SpectralFunction& f) const;

  /// Coefficients of one channel (any scale j >= -P, no window check) from a
  /// lazily evaluated Fourier coefficient m -> F_m. Only frequencies in the
  /// channel's support are queried.
  std::vector<cplx> analyze_channel(const std::function<cplx(const IndexVec&)>& fourier,
                                    ChannelKey key) const;
  std::vector<cplx> analyze_channel(const SpectralFunction& f, ChannelKey key) const;

  GridFunction synthesize(const CoefficientField& c) const;
  SpectralFunction synthesize_spectrum(const CoefficientField& c) const;
  /// Accumulate one channel block (any scale) into a spectrum.
  void accumulate_channel(SpectralFunction& out, ChannelKey key,
                          std::span<const cplx> block) const;

  struct SparseSpectrum {
    std::vector<IndexVec> m;
    std::vector<cplx> value;
  };
  /// Fourier series coefficients of one periodized wavelet.
  SparseSpectrum wavelet_spectrum(const WaveletIndex& index) const;
  /// c_m of one periodized wavelet at a single frequency.
  cplx wavelet_fourier_coefficient(const WaveletIndex& index, const IndexVec& m) const;
  GridFunction sample_wavelet(const WaveletIndex& index) const;

  /// <F, psi_index> = L^D sum_m F_m conj(c_m) for a lazily evaluated spectrum.
  cplx coefficient(const std::function<cplx(const IndexVec&)>& fourier,
                   const WaveletIndex& index) const;

  using Multiplier = std::function<cplx(const IndexVec&)>;
  /// (M psi_a, psi_b) = L^D sum_m M(m) c^a_m conj(c^b_m), summed over the
  /// support of psi_a; M defaults to the identity.
  cplx spectral_inner_product(const WaveletIndex& a, const WaveletIndex& b,
                              const Multiplier& multiplier = nullptr) const;

  bool representable_father_scale(int j0) const;
  /// Orthogonal projection onto the periodized scale-j0 father space.
  GridFunction father_projection(const GridFunction& f, int j0) const;

 private:
  double channel_amplitude(int j) const;

  std::shared_ptr<const MeyerSystem> meyer_;
  GridSpec spec_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::pair<bool, int>, std::unique_ptr<const std::vector<AxisFactor>>> factor_cache_;
};

/// max over `x_samples` of sum_{|k| <= radius} |phi(x - k)|.
double father_summability_check(const MeyerSystem& meyer, std::span<const double> x_samples,
                                int radius, double tol = 1e-11);

/// Direct D=2 lattice sum sum_{|k1|,|k2| <= radius} |phi(x1-k1) phi(x2-k2)|.
double father_summability_check_2d(const MeyerSystem& meyer, double x1, double x2, int radius,
                                   double tol = 1e-11);

}  // namespace tlwavelab
