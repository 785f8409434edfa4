// SPDX-License-Identifier: Apache-2.0
#include "tlwavelab/wavelet_grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tlwavelab/fft.hpp"

namespace tlwavelab {
namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t k) { return ((a % k) + k) % k; }

}  // namespace

WaveletGrid::WaveletGrid(std::shared_ptr<const MeyerSystem> meyer, const GridSpec& spec)
    : meyer_(std::move(meyer)), spec_(spec) {
  if (!meyer_) throw std::invalid_argument("WaveletGrid: null Meyer system");
  spec_.validate();
}

double WaveletGrid::channel_amplitude(int j) const {
  return std::pow(kTwoPi, 0.5 * spec_.dim) * std::pow(2.0, -0.5 * spec_.dim * j);
}

const std::vector<WaveletGrid::AxisFactor>& WaveletGrid::axis_factors(bool mother, int j) const {
  std::lock_guard lock(cache_mutex_);
  auto& slot = factor_cache_[{mother, j}];
  if (slot) return *slot;

  const std::int64_t kk = spec_.translations(j);
  const std::int64_t half = spec_.samples_per_axis() / 2;
  // psi_hat lives on K/3 <= |m| <= 4K/3, Phi on |m| < 2K/3.
  const std::int64_t reach = mother ? (4 * kk) / 3 + 1 : (2 * kk) / 3 + 1;
  const std::int64_t gap = mother ? std::max<std::int64_t>(kk / 3 - 1, 0) : 0;
  auto out = std::make_unique<std::vector<AxisFactor>>();
  auto scan = [&](std::int64_t lo, std::int64_t hi) {
    lo = std::max(lo, -half);
    hi = std::min(hi, half - 1);
    for (std::int64_t m = lo; m <= hi; ++m) {
      const double xi = kTwoPi * static_cast<double>(m) / static_cast<double>(kk);
      const cplx v = meyer_->factor(mother, xi);
      if (v != cplx(0.0, 0.0)) out->push_back({m, v});
    }
  };
  if (gap > 0) {
    scan(-reach, -gap);
    scan(gap, reach);
  } else {
    scan(-reach, reach);
  }
  slot = std::move(out);
  return *slot;
}

std::vector<cplx> WaveletGrid::analyze_channel(
    const std::function<cplx(const IndexVec&)>& fourier, ChannelKey key) const {
  const std::int64_t kk = spec_.translations(key.j);
  const int dim = spec_.dim;
  std::vector<cplx> block(static_cast<std::size_t>(dim == 1 ? kk : kk * kk));

  const auto& f0 = axis_factors(key.label.component(0), key.j);
  if (dim == 1) {
    for (const auto& a : f0) {
      block[static_cast<std::size_t>(floor_mod(a.m, kk))] += fourier({a.m, 0}) * std::conj(a.value);
    }
  } else {
    const auto& f1 = axis_factors(key.label.component(1), key.j);
    for (const auto& a : f0) {
      const auto row = static_cast<std::size_t>(floor_mod(a.m, kk) * kk);
      for (const auto& b : f1) {
        block[row + static_cast<std::size_t>(floor_mod(b.m, kk))] +=
            fourier({a.m, b.m}) * std::conj(a.value * b.value);
      }
    }
  }
  fft::backward(block, dim, kk);
  const double amp = channel_amplitude(key.j);
  for (auto& v : block) v *= amp;
  return block;
}

std::vector<cplx> WaveletGrid::analyze_channel(const SpectralFunction& f, ChannelKey key) const {
  if (!(f.spec == spec_)) throw std::invalid_argument("analyze: grid spec mismatch");
  const std::int64_t n = spec_.samples_per_axis();
  if (spec_.dim == 1) {
    return analyze_channel(
        [&](const IndexVec& m) { return f.coeffs[static_cast<std::size_t>(spec_.fft_position(m[0]))]; },
        key);
  }
  return analyze_channel(
      [&](const IndexVec& m) {
        return f.coeffs[static_cast<std::size_t>(spec_.fft_position(m[0]) * n +
                                                 spec_.fft_position(m[1]))];
      },
      key);
}

CoefficientField WaveletGrid::analyze(const SpectralFunction& f) const {
  if (!(f.spec == spec_)) throw std::invalid_argument("analyze: grid spec mismatch");
  CoefficientField out(spec_);
  auto store = [&](ChannelKey key) {
    auto block = analyze_channel(f, key);
    const bool all_zero =
        std::all_of(block.begin(), block.end(), [](cplx v) { return v == cplx(0.0, 0.0); });
    if (!all_zero) out.put_channel(key, std::move(block));
  };
  store({spec_.j_lo, TensorLabel::father()});
  for (int j = spec_.j_lo; j <= spec_.j_hi; ++j) {
    for (const TensorLabel label : mother_labels(spec_.dim)) store({j, label});
  }
  return out;
}

CoefficientField WaveletGrid::analyze(const GridFunction& f) const {
  return analyze(to_spectrum(f));
}

void WaveletGrid::accumulate_channel(SpectralFunction& out, ChannelKey key,
                                     std::span<const cplx> block) const {
  const std::int64_t kk = spec_.translations(key.j);
  const std::int64_t n = spec_.samples_per_axis();
  const int dim = spec_.dim;
  std::vector<cplx> hat(block.begin(), block.end());
  if (hat.size() != static_cast<std::size_t>(dim == 1 ? kk : kk * kk)) {
    throw std::invalid_argument("synthesize: channel block has wrong size");
  }
  fft::forward(hat, dim, kk);
  const double amp = channel_amplitude(key.j) / std::pow(spec_.period(), dim);

  const auto& f0 = axis_factors(key.label.component(0), key.j);
  if (dim == 1) {
    for (const auto& a : f0) {
      out.coeffs[static_cast<std::size_t>(spec_.fft_position(a.m))] +=
          amp * a.value * hat[static_cast<std::size_t>(floor_mod(a.m, kk))];
    }
    return;
  }
  const auto& f1 = axis_factors(key.label.component(1), key.j);
  for (const auto& a : f0) {
    const auto row = static_cast<std::size_t>(floor_mod(a.m, kk) * kk);
    const auto out_row = static_cast<std::size_t>(spec_.fft_position(a.m) * n);
    for (const auto& b : f1) {
      out.coeffs[out_row + static_cast<std::size_t>(spec_.fft_position(b.m))] +=
          amp * a.value * b.value * hat[row + static_cast<std::size_t>(floor_mod(b.m, kk))];
    }
  }
}

SpectralFunction WaveletGrid::synthesize_spectrum(const CoefficientField& c) const {
  if (!(c.spec() == spec_)) throw std::invalid_argument("synthesize: grid spec mismatch");
  SpectralFunction out(spec_);
  for (const auto& [key, block] : c.channels()) accumulate_channel(out, key, block);
  return out;
}

GridFunction WaveletGrid::synthesize(const CoefficientField& c) const {
  return to_grid(synthesize_spectrum(c));
}

cplx WaveletGrid::wavelet_fourier_coefficient(const WaveletIndex& index, const IndexVec& m) const {
  const std::int64_t kk = spec_.translations(index.j);
  cplx value(channel_amplitude(index.j) / std::pow(spec_.period(), spec_.dim), 0.0);
  double phase = 0.0;
  for (int axis = 0; axis < spec_.dim; ++axis) {
    const auto a = static_cast<std::size_t>(axis);
    const double xi = kTwoPi * static_cast<double>(m[a]) / static_cast<double>(kk);
    value *= meyer_->factor(index.label.component(axis), xi);
    if (value == cplx(0.0, 0.0)) return value;
    phase -= kTwoPi * static_cast<double>(floor_mod(m[a] * floor_mod(index.k[a], kk), kk)) /
             static_cast<double>(kk);
  }
  return value * std::polar(1.0, phase);
}

WaveletGrid::SparseSpectrum WaveletGrid::wavelet_spectrum(const WaveletIndex& index) const {
  SparseSpectrum out;
  const auto& f0 = axis_factors(index.label.component(0), index.j);
  if (spec_.dim == 1) {
    for (const auto& a : f0) {
      const IndexVec m{a.m, 0};
      out.m.push_back(m);
      out.value.push_back(wavelet_fourier_coefficient(index, m));
    }
    return out;
  }
  const auto& f1 = axis_factors(index.label.component(1), index.j);
  for (const auto& a : f0) {
    for (const auto& b : f1) {
      const IndexVec m{a.m, b.m};
      out.m.push_back(m);
      out.value.push_back(wavelet_fourier_coefficient(index, m));
    }
  }
  return out;
}

GridFunction WaveletGrid::sample_wavelet(const WaveletIndex& index) const {
  SpectralFunction s(spec_);
  const std::int64_t n = spec_.samples_per_axis();
  const auto sparse = wavelet_spectrum(index);
  for (std::size_t i = 0; i < sparse.m.size(); ++i) {
    std::int64_t pos = spec_.fft_position(sparse.m[i][0]);
    if (spec_.dim == 2) pos = pos * n + spec_.fft_position(sparse.m[i][1]);
    s.coeffs[static_cast<std::size_t>(pos)] += sparse.value[i];
  }
  return to_grid(s);
}

cplx WaveletGrid::spectral_inner_product(const WaveletIndex& a, const WaveletIndex& b,
                                         const Multiplier& multiplier) const {
  const auto sparse = wavelet_spectrum(a);
  cplx sum = 0.0;
  for (std::size_t i = 0; i < sparse.m.size(); ++i) {
    const cplx other = wavelet_fourier_coefficient(b, sparse.m[i]);
    if (other == cplx(0.0, 0.0)) continue;
    cplx term = sparse.value[i] * std::conj(other);
    if (multiplier) term *= multiplier(sparse.m[i]);
    sum += term;
  }
  return sum * std::pow(spec_.period(), spec_.dim);
}

cplx WaveletGrid::coefficient(const std::function<cplx(const IndexVec&)>& fourier,
                              const WaveletIndex& index) const {
  const auto sparse = wavelet_spectrum(index);
  cplx sum = 0.0;
  for (std::size_t i = 0; i < sparse.m.size(); ++i) sum += fourier(sparse.m[i]) * std::conj(sparse.value[i]);
  return sum * std::pow(spec_.period(), spec_.dim);
}

bool WaveletGrid::representable_father_scale(int j0) const {
  // Needs at least one translation and Phi's support 2^{j0} 4pi/3 below Nyquist.
  return j0 >= -spec_.period_exp && j0 <= spec_.grid_exp - spec_.period_exp - 1;
}

GridFunction WaveletGrid::father_projection(const GridFunction& f, int j0) const {
  if (!representable_father_scale(j0)) {
    throw std::invalid_argument("father_projection: scale not representable on this grid");
  }
  const SpectralFunction spectrum = to_spectrum(f);
  const ChannelKey key{j0, TensorLabel::father()};
  const auto block = analyze_channel(spectrum, key);
  SpectralFunction out(spec_);
  accumulate_channel(out, key, block);
  return to_grid(out);
}

double father_summability_check(const MeyerSystem& meyer, std::span<const double> x_samples,
                                int radius, double tol) {
  double best = 0.0;
  for (const double x : x_samples) {
    double sum = 0.0;
    for (int k = -radius; k <= radius; ++k) sum += std::abs(eval_phi_space(meyer, x - k, tol));
    best = std::max(best, sum);
  }
  return best;
}

double father_summability_check_2d(const MeyerSystem& meyer, double x1, double x2, int radius,
                                   double tol) {
  std::vector<double> a;
  std::vector<double> b;
  for (int k = -radius; k <= radius; ++k) {
    a.push_back(eval_phi_space(meyer, x1 - k, tol));
    b.push_back(eval_phi_space(meyer, x2 - k, tol));
  }
  double sum = 0.0;
  for (const double u : a) {
    for (const double v : b) sum += std::abs(u * v);
  }
  return sum;
}

}  // namespace tlwavelab
