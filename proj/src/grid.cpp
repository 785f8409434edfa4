// SPDX-License-Identifier: Apache-2.0
#include "tlwavelab/grid.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "tlwavelab/fft.hpp"

namespace tlwavelab {

GridSpec GridSpec::make(int dim, int period_exp, int grid_exp) {
  return make(dim, period_exp, grid_exp, min_scale(period_exp), max_scale(period_exp, grid_exp));
}

GridSpec GridSpec::make(int dim, int period_exp, int grid_exp, int j_lo, int j_hi) {
  GridSpec s{dim, period_exp, grid_exp, j_lo, j_hi};
  s.validate();
  return s;
}

void GridSpec::validate() const {
  std::ostringstream err;
  if (dim < 1 || dim > kMaxDim) {
    err << "dimension " << dim << " unsupported (1 or 2)";
  } else if (period_exp < 0 || period_exp > 30) {
    err << "period exponent " << period_exp << " out of range [0, 30]";
  } else if (grid_exp < 1 || grid_exp > 28 || (dim == 2 && grid_exp > 14)) {
    err << "grid exponent " << grid_exp << " out of range for D=" << dim;
  } else if (j_lo > j_hi) {
    err << "empty scale window [" << j_lo << ", " << j_hi << "]";
  } else if (j_hi > max_scale(period_exp, grid_exp)) {
    err << "j_hi=" << j_hi << " exceeds Nyquist limit G-P-2=" << max_scale(period_exp, grid_exp);
  } else if (j_lo < min_scale(period_exp)) {
    err << "j_lo=" << j_lo << " below coarsest admissible scale -P+1=" << min_scale(period_exp);
  }
  if (!err.str().empty()) throw std::invalid_argument("GridSpec: " + err.str());
}

double GridSpec::period() const { return std::ldexp(1.0, period_exp); }

std::size_t GridSpec::size() const {
  std::size_t n = static_cast<std::size_t>(samples_per_axis());
  return dim == 1 ? n : n * n;
}

double GridSpec::cell_volume() const { return std::pow(spacing(), dim); }

std::int64_t GridSpec::translations(int j) const {
  if (j + period_exp < 0) throw std::invalid_argument("GridSpec: scale coarser than the torus");
  return std::int64_t{1} << (j + period_exp);
}

std::size_t channel_size(const GridSpec& spec, int j) {
  const auto k = static_cast<std::size_t>(spec.translations(j));
  return spec.dim == 1 ? k : k * k;
}

// ---------------------------------------------------------------------------

std::array<double, kMaxDim> GridFunction::point(std::size_t i) const {
  const double h = spec.spacing();
  const auto n = static_cast<std::size_t>(spec.samples_per_axis());
  if (spec.dim == 1) return {h * static_cast<double>(i), 0.0};
  return {h * static_cast<double>(i / n), h * static_cast<double>(i % n)};
}

GridFunction GridFunction::from_real(const GridSpec& s,
                                     const std::function<double(std::span<const double>)>& fn) {
  GridFunction f(s);
  for (std::size_t i = 0; i < f.samples.size(); ++i) {
    const auto x = f.point(i);
    f.samples[i] = fn(std::span<const double>(x.data(), static_cast<std::size_t>(s.dim)));
  }
  return f;
}

GridFunction& GridFunction::operator+=(const GridFunction& other) {
  if (!(spec == other.spec)) throw std::invalid_argument("GridFunction: spec mismatch");
  for (std::size_t i = 0; i < samples.size(); ++i) samples[i] += other.samples[i];
  return *this;
}

GridFunction& GridFunction::operator-=(const GridFunction& other) {
  if (!(spec == other.spec)) throw std::invalid_argument("GridFunction: spec mismatch");
  for (std::size_t i = 0; i < samples.size(); ++i) samples[i] -= other.samples[i];
  return *this;
}

GridFunction& GridFunction::operator*=(cplx alpha) {
  for (auto& v : samples) v *= alpha;
  return *this;
}

double GridFunction::max_imag() const {
  double m = 0.0;
  for (const auto& v : samples) m = std::max(m, std::abs(v.imag()));
  return m;
}

double GridFunction::l2_norm() const {
  double s = 0.0;
  for (const auto& v : samples) s += std::norm(v);
  return std::sqrt(s * spec.cell_volume());
}

GridFunction operator+(GridFunction a, const GridFunction& b) { return a += b; }
GridFunction operator-(GridFunction a, const GridFunction& b) { return a -= b; }
GridFunction operator*(cplx alpha, GridFunction f) { return f *= alpha; }

cplx inner_product(const GridFunction& f, const GridFunction& g) {
  if (!(f.spec == g.spec)) throw std::invalid_argument("inner_product: spec mismatch");
  cplx s = 0.0;
  for (std::size_t i = 0; i < f.samples.size(); ++i) s += f.samples[i] * std::conj(g.samples[i]);
  return s * f.spec.cell_volume();
}

double SpectralFunction::l2_norm() const {
  double s = 0.0;
  for (const auto& v : coeffs) s += std::norm(v);
  return std::sqrt(s * std::pow(spec.period(), spec.dim));
}

SpectralFunction to_spectrum(const GridFunction& f) {
  SpectralFunction s(f.spec);
  s.coeffs = f.samples;
  fft::forward(s.coeffs, f.spec.dim, f.spec.samples_per_axis());
  const double inv = 1.0 / static_cast<double>(f.samples.size());
  for (auto& v : s.coeffs) v *= inv;
  return s;
}

GridFunction to_grid(const SpectralFunction& s) {
  GridFunction f(s.spec);
  f.samples = s.coeffs;
  fft::backward(f.samples, s.spec.dim, s.spec.samples_per_axis());
  return f;
}

// ---------------------------------------------------------------------------

void CoefficientField::check_index(const WaveletIndex& index) const {
  if (!index.label.valid_for(spec_.dim)) {
    throw std::invalid_argument("CoefficientField: label invalid for dimension");
  }
  if (index.label.is_father()) {
    if (index.j != spec_.j_lo) {
      throw std::invalid_argument("CoefficientField: father entries live at j_lo only");
    }
  } else if (index.j < spec_.j_lo || index.j > spec_.j_hi) {
    throw std::invalid_argument("CoefficientField: scale outside window");
  }
}

std::size_t CoefficientField::offset(const WaveletIndex& index) const {
  const std::int64_t kk = spec_.translations(index.j);
  auto wrap = [kk](std::int64_t v) { return static_cast<std::size_t>(((v % kk) + kk) % kk); };
  if (spec_.dim == 1) return wrap(index.k[0]);
  return wrap(index.k[0]) * static_cast<std::size_t>(kk) + wrap(index.k[1]);
}

cplx CoefficientField::get(const WaveletIndex& index) const {
  check_index(index);
  const auto* block = find_channel({index.j, index.label});
  return block ? (*block)[offset(index)] : cplx(0.0, 0.0);
}

void CoefficientField::set(const WaveletIndex& index, cplx value) {
  check_index(index);
  channel({index.j, index.label})[offset(index)] = value;
}

void CoefficientField::add(const WaveletIndex& index, cplx value) {
  check_index(index);
  channel({index.j, index.label})[offset(index)] += value;
}

std::vector<cplx>& CoefficientField::channel(ChannelKey key) {
  auto it = channels_.find(key);
  if (it == channels_.end()) {
    check_index({key.label, key.j, {0, 0}});
    it = channels_.emplace(key, std::vector<cplx>(channel_size(spec_, key.j))).first;
  }
  return it->second;
}

const std::vector<cplx>* CoefficientField::find_channel(ChannelKey key) const {
  const auto it = channels_.find(key);
  return it == channels_.end() ? nullptr : &it->second;
}

void CoefficientField::put_channel(ChannelKey key, std::vector<cplx> values) {
  check_index({key.label, key.j, {0, 0}});
  if (values.size() != channel_size(spec_, key.j)) {
    throw std::invalid_argument("CoefficientField: channel block has wrong size");
  }
  channels_[key] = std::move(values);
}

std::size_t CoefficientField::nonzero_count(double threshold) const {
  std::size_t n = 0;
  for (const auto& [key, block] : channels_) {
    for (const auto& v : block) n += std::abs(v) > threshold ? 1 : 0;
  }
  return n;
}

double CoefficientField::energy() const {
  double e = 0.0;
  for (const auto& [key, block] : channels_) {
    for (const auto& v : block) e += std::norm(v);
  }
  return e;
}

double CoefficientField::max_abs() const {
  double m = 0.0;
  for (const auto& [key, block] : channels_) {
    for (const auto& v : block) m = std::max(m, std::abs(v));
  }
  return m;
}

std::optional<int> CoefficientField::min_mother_scale() const {
  for (const auto& [key, block] : channels_) {
    if (key.label.is_mother() &&
        std::any_of(block.begin(), block.end(), [](cplx v) { return v != cplx(0.0, 0.0); })) {
      return key.j;
    }
  }
  return std::nullopt;
}

std::optional<int> CoefficientField::max_mother_scale() const {
  for (auto it = channels_.rbegin(); it != channels_.rend(); ++it) {
    const auto& block = it->second;
    if (it->first.label.is_mother() &&
        std::any_of(block.begin(), block.end(), [](cplx v) { return v != cplx(0.0, 0.0); })) {
      return it->first.j;
    }
  }
  return std::nullopt;
}

CoefficientField CoefficientField::restrict_scales(int lo, int hi, bool keep_father) const {
  CoefficientField out(spec_);
  for (const auto& [key, block] : channels_) {
    const bool keep = key.label.is_father() ? keep_father : (key.j >= lo && key.j <= hi);
    if (keep) out.channels_.emplace(key, block);
  }
  return out;
}

void CoefficientField::prune() {
  std::erase_if(channels_, [](const auto& item) {
    return std::all_of(item.second.begin(), item.second.end(),
                       [](cplx v) { return v == cplx(0.0, 0.0); });
  });
}

void CoefficientField::scale(cplx alpha) {
  for (auto& [key, block] : channels_) {
    for (auto& v : block) v *= alpha;
  }
}

void CoefficientField::for_each(const std::function<void(const WaveletIndex&, cplx)>& fn,
                                double threshold) const {
  for (const auto& [key, block] : channels_) {
    const auto kk = static_cast<std::size_t>(spec_.translations(key.j));
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (!(std::abs(block[i]) > threshold)) continue;
      WaveletIndex index{key.label, key.j, {0, 0}};
      if (spec_.dim == 1) {
        index.k[0] = static_cast<std::int64_t>(i);
      } else {
        index.k[0] = static_cast<std::int64_t>(i / kk);
        index.k[1] = static_cast<std::int64_t>(i % kk);
      }
      fn(index, block[i]);
    }
  }
}

CoefficientField& CoefficientField::operator+=(const CoefficientField& other) {
  if (!(spec_ == other.spec_)) throw std::invalid_argument("CoefficientField: spec mismatch");
  for (const auto& [key, block] : other.channels_) {
    auto& mine = channel(key);
    for (std::size_t i = 0; i < block.size(); ++i) mine[i] += block[i];
  }
  return *this;
}

}  // namespace tlwavelab
