// SPDX-License-Identifier: Apache-2.0
//
// Periodic discretization of R^D by the torus [0, L)^D, L = 2^P, sampled with
// N = 2^G points per axis. Samples are stored row-major (axis 0 slowest).
// The spectral form holds Fourier series coefficients F_m with
//   f(x_n) = sum_m F_m exp(i xi_m . x_n),  xi_m = 2 pi m / L,
// where m is stored at FFT position (m mod N) per axis.
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "tlwavelab/meyer.hpp"

namespace tlwavelab {

inline constexpr int kMaxDim = 2;
using IndexVec = std::array<std::int64_t, kMaxDim>;

struct GridSpec {
  int dim = 1;
  int period_exp = 5;  // P
  int grid_exp = 14;   // G
  int j_lo = -4;
  int j_hi = 7;

  /// Widest admissible scale window for the given grid.
  static GridSpec make(int dim, int period_exp, int grid_exp);
  static GridSpec make(int dim, int period_exp, int grid_exp, int j_lo, int j_hi);

  static int max_scale(int period_exp, int grid_exp) { return grid_exp - period_exp - 2; }
  static int min_scale(int period_exp) { return -period_exp + 1; }

  /// Throws std::invalid_argument naming the violated constraint.
  void validate() const;

  double period() const;
  std::int64_t samples_per_axis() const { return std::int64_t{1} << grid_exp; }
  std::size_t size() const;
  double spacing() const { return period() / static_cast<double>(samples_per_axis()); }
  double cell_volume() const;
  /// Number of translations per axis at scale j: 2^{j+P}.
  std::int64_t translations(int j) const;
  /// Signed frequency index of FFT position `pos`.
  std::int64_t signed_frequency(std::int64_t pos) const {
    const std::int64_t n = samples_per_axis();
    return pos < n / 2 ? pos : pos - n;
  }
  std::int64_t fft_position(std::int64_t m) const {
    const std::int64_t n = samples_per_axis();
    return ((m % n) + n) % n;
  }

  bool operator==(const GridSpec&) const = default;
};

/// Spatial samples of a periodic function.
struct GridFunction {
  GridSpec spec;
  std::vector<cplx> samples;

  GridFunction() = default;
  explicit GridFunction(const GridSpec& s) : spec(s), samples(s.size()) {}

  /// Sample position of flat index `i`.
  std::array<double, kMaxDim> point(std::size_t i) const;
  static GridFunction from_real(const GridSpec& s,
                                const std::function<double(std::span<const double>)>& fn);

  GridFunction& operator+=(const GridFunction& other);
  GridFunction& operator-=(const GridFunction& other);
  GridFunction& operator*=(cplx alpha);
  double max_imag() const;
  double l2_norm() const;  // (int |f|^2)^{1/2} by the rectangle rule
};

GridFunction operator+(GridFunction a, const GridFunction& b);
GridFunction operator-(GridFunction a, const GridFunction& b);
GridFunction operator*(cplx alpha, GridFunction f);
/// int f conj(g) over the torus, rectangle rule.
cplx inner_product(const GridFunction& f, const GridFunction& g);

/// Fourier series coefficients of a grid function (same layout as samples).
struct SpectralFunction {
  GridSpec spec;
  std::vector<cplx> coeffs;

  SpectralFunction() = default;
  explicit SpectralFunction(const GridSpec& s) : spec(s), coeffs(s.size()) {}
  double l2_norm() const;  // L^{D/2} (sum |F_m|^2)^{1/2}
};

SpectralFunction to_spectrum(const GridFunction& f);
GridFunction to_grid(const SpectralFunction& s);

/// (lambda, j, k): label, scale, translation. Father indices use the zero label.
struct WaveletIndex {
  TensorLabel label;
  int j = 0;
  IndexVec k{0, 0};
  auto operator<=>(const WaveletIndex&) const = default;
};

/// One (label, scale) block of coefficients; ordered by scale then label.
struct ChannelKey {
  int j = 0;
  TensorLabel label;
  auto operator<=>(const ChannelKey&) const = default;
};

/// Coefficients against the L^2-orthonormal periodized system
/// 2^{Dj/2} psi^lambda(2^j x - k). Entries are grouped in dense per-channel
/// blocks of 2^{(j+P)D} values (row-major over k); absent channels are zero.
class CoefficientField {
 public:
  CoefficientField() = default;
  explicit CoefficientField(const GridSpec& spec) : spec_(spec) {}

  const GridSpec& spec() const { return spec_; }

  /// Translation components are reduced modulo 2^{j+P}.
  cplx get(const WaveletIndex& index) const;
  void set(const WaveletIndex& index, cplx value);
  void add(const WaveletIndex& index, cplx value);

  /// Dense block for a channel, created zero-filled on first access.
  std::vector<cplx>& channel(ChannelKey key);
  const std::vector<cplx>* find_channel(ChannelKey key) const;
  void put_channel(ChannelKey key, std::vector<cplx> values);
  const std::map<ChannelKey, std::vector<cplx>>& channels() const { return channels_; }

  std::size_t nonzero_count(double threshold = 0.0) const;
  bool empty() const { return nonzero_count() == 0; }
  double energy() const;
  double max_abs() const;

  /// Mother scales that carry at least one nonzero entry.
  std::optional<int> min_mother_scale() const;
  std::optional<int> max_mother_scale() const;

  /// Copy keeping mother channels with lo <= j <= hi (and the father if asked).
  CoefficientField restrict_scales(int lo, int hi, bool keep_father = false) const;
  /// Drop channels whose entries are all exactly zero.
  void prune();
  void scale(cplx alpha);

  /// Visit every entry with |value| > threshold in index order.
  void for_each(const std::function<void(const WaveletIndex&, cplx)>& fn,
                double threshold = 0.0) const;

  CoefficientField& operator+=(const CoefficientField& other);

 private:
  std::size_t offset(const WaveletIndex& index) const;
  void check_index(const WaveletIndex& index) const;

  GridSpec spec_;
  std::map<ChannelKey, std::vector<cplx>> channels_;
};

/// Number of entries in a channel block at scale j.
std::size_t channel_size(const GridSpec& spec, int j);

}  // namespace tlwavelab
