// SPDX-License-Identifier: Apache-2.0
#include "tlwavelab/random.hpp"

#include <cmath>
#include <stdexcept>

namespace tlwavelab {

std::uint64_t derive_seed(std::uint64_t seed, std::string_view job) {
  // FNV-1a over the job name, mixed with the run seed by splitmix64.
  std::uint64_t h = 1469598103934665603ULL;
  for (const char ch : job) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ULL;
  }
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL + h;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::int64_t band_limit(const GridSpec& spec) {
  return (2 * spec.translations(spec.j_hi)) / 3;
}

SpectralFunction random_band_limited_spectrum(const GridSpec& spec, Rng& rng,
                                              const BandLimitedOptions& opts) {
  const auto limit = static_cast<std::int64_t>(
      std::floor(opts.band_fraction * static_cast<double>(band_limit(spec))));
  if (limit < 1) throw std::invalid_argument("random_band_limited: empty band");
  const double m0 = std::max(1.0, static_cast<double>(limit) / 8.0);
  std::normal_distribution<double> normal(0.0, 1.0);
  const std::int64_t n = spec.samples_per_axis();
  SpectralFunction s(spec);

  auto amplitude = [&](std::int64_t a, std::int64_t b) {
    const double r = std::hypot(static_cast<double>(a), static_cast<double>(b));
    return std::pow(1.0 + r / m0, -opts.decay);
  };
  auto position = [&](std::int64_t a, std::int64_t b) {
    const std::int64_t p = spec.fft_position(a);
    return static_cast<std::size_t>(spec.dim == 1 ? p : p * n + spec.fft_position(b));
  };

  const std::int64_t lim1 = spec.dim == 2 ? limit : 0;
  for (std::int64_t a = -limit; a <= limit; ++a) {
    for (std::int64_t b = -lim1; b <= lim1; ++b) {
      const double re = normal(rng);
      const double im = normal(rng);
      s.coeffs[position(a, b)] = amplitude(a, b) * cplx(re, im);
    }
  }
  if (opts.real_valued) {
    // Symmetrize: F_{-m} = conj(F_m).
    for (std::int64_t a = -limit; a <= limit; ++a) {
      for (std::int64_t b = -lim1; b <= lim1; ++b) {
        const auto p = position(a, b);
        const auto q = position(-a, -b);
        if (p < q) {
          const cplx avg = 0.5 * (s.coeffs[p] + std::conj(s.coeffs[q]));
          s.coeffs[p] = avg;
          s.coeffs[q] = std::conj(avg);
        } else if (p == q) {
          s.coeffs[p] = s.coeffs[p].real();
        }
      }
    }
  }
  if (opts.zero_mean) s.coeffs[0] = 0.0;
  return s;
}

GridFunction random_band_limited(const GridSpec& spec, Rng& rng, const BandLimitedOptions& opts) {
  GridFunction f = to_grid(random_band_limited_spectrum(spec, rng, opts));
  if (opts.real_valued) {
    for (auto& v : f.samples) v = v.real();
  }
  return f;
}

CoefficientField random_mother_field(const GridSpec& spec, Rng& rng, std::size_t count, int lo,
                                     int hi) {
  lo = std::max(lo, spec.j_lo);
  hi = std::min(hi, spec.j_hi);
  if (lo > hi) throw std::invalid_argument("random_mother_field: empty scale range");
  std::uniform_int_distribution<int> scale(lo, hi);
  std::uniform_int_distribution<unsigned> label(1, (1U << spec.dim) - 1);
  std::normal_distribution<double> normal(0.0, 1.0);
  CoefficientField c(spec);
  for (std::size_t i = 0; i < count; ++i) {
    WaveletIndex idx;
    idx.j = scale(rng);
    idx.label.bits = label(rng);
    std::uniform_int_distribution<std::int64_t> trans(0, spec.translations(idx.j) - 1);
    for (int a = 0; a < spec.dim; ++a) idx.k[static_cast<std::size_t>(a)] = trans(rng);
    const double re = normal(rng);
    const double im = normal(rng);
    c.add(idx, {re, im});
  }
  return c;
}

WaveletIndex random_index(const GridSpec& spec, Rng& rng, bool allow_father) {
  const int channels_per_scale = (1 << spec.dim) - 1;
  const int scales = spec.j_hi - spec.j_lo + 1;
  std::uniform_int_distribution<int> pick(0, scales * channels_per_scale - (allow_father ? 0 : 1));
  const int p = pick(rng);
  WaveletIndex idx;
  if (p == scales * channels_per_scale) {
    idx.j = spec.j_lo;
    idx.label = TensorLabel::father();
  } else {
    idx.j = spec.j_lo + p / channels_per_scale;
    idx.label.bits = static_cast<unsigned>(p % channels_per_scale) + 1;
  }
  std::uniform_int_distribution<std::int64_t> trans(0, spec.translations(idx.j) - 1);
  for (int a = 0; a < spec.dim; ++a) idx.k[static_cast<std::size_t>(a)] = trans(rng);
  return idx;
}

}  // namespace tlwavelab
