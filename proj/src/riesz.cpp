// SPDX-License-Identifier: Apache-2.0
#include "tlwavelab/riesz.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "tlwavelab/norms.hpp"
#include "tlwavelab/random.hpp"

namespace tlwavelab {

cplx riesz_symbol(int ell, const IndexVec& m, int dim) {
  if (ell < 0 || ell > dim) throw std::invalid_argument("Riesz component out of range");
  if (ell == 0) return 1.0;
  double norm2 = 0.0;
  for (int a = 0; a < dim; ++a) {
    const auto v = static_cast<double>(m[static_cast<std::size_t>(a)]);
    norm2 += v * v;
  }
  if (norm2 == 0.0) return 0.0;
  // The 2pi/L factor of xi cancels in xi_l / |xi|.
  return {0.0, -static_cast<double>(m[static_cast<std::size_t>(ell - 1)]) / std::sqrt(norm2)};
}

void riesz_apply_spectrum(int ell, SpectralFunction& s) {
  const GridSpec& spec = s.spec;
  if (ell < 0 || ell > spec.dim) throw std::invalid_argument("Riesz component out of range");
  if (ell == 0) return;
  const std::int64_t n = spec.samples_per_axis();
  if (spec.dim == 1) {
    for (std::int64_t p = 0; p < n; ++p) {
      s.coeffs[static_cast<std::size_t>(p)] *= riesz_symbol(1, {spec.signed_frequency(p), 0}, 1);
    }
    return;
  }
  for (std::int64_t p0 = 0; p0 < n; ++p0) {
    for (std::int64_t p1 = 0; p1 < n; ++p1) {
      const IndexVec m{spec.signed_frequency(p0), spec.signed_frequency(p1)};
      s.coeffs[static_cast<std::size_t>(p0 * n + p1)] *= riesz_symbol(ell, m, 2);
    }
  }
}

GridFunction riesz_apply(int ell, const GridFunction& f) {
  if (ell < 0 || ell > f.spec.dim) throw std::invalid_argument("Riesz component out of range");
  if (ell == 0) return f;
  SpectralFunction s = to_spectrum(f);
  riesz_apply_spectrum(ell, s);
  return to_grid(s);
}

GridFunction riesz_square_sum(const GridFunction& f) {
  const SpectralFunction s = to_spectrum(f);
  double peak = 0.0;
  for (const cplx v : s.coeffs) peak = std::max(peak, std::abs(v));
  if (std::abs(s.coeffs[0]) > 1e-12 * peak) {
    throw std::invalid_argument(
        "riesz_square_sum: input has nonzero mean; the xi = 0 mode is annihilated by every R_l, "
        "so sum R_l^2 f = -f cannot hold");
  }
  SpectralFunction total(f.spec);
  for (int ell = 1; ell <= f.spec.dim; ++ell) {
    SpectralFunction t = s;
    riesz_apply_spectrum(ell, t);
    riesz_apply_spectrum(ell, t);
    for (std::size_t i = 0; i < t.coeffs.size(); ++i) total.coeffs[i] += t.coeffs[i];
  }
  return to_grid(total);
}

NearDiagonalResult near_diagonal_gram(const WaveletGrid& grid, int j, int jt, int sample_count,
                                      std::uint64_t seed) {
  const GridSpec& spec = grid.spec();
  for (const int scale : {j, jt}) {
    if (scale < spec.j_lo || scale > spec.j_hi) {
      throw std::invalid_argument("near_diagonal_gram: scale " + std::to_string(scale) +
                                  " outside the grid window");
    }
  }
  Rng rng(derive_seed(seed, "near_diagonal_gram"));
  const auto labels = mother_labels(spec.dim);
  std::uniform_int_distribution<std::size_t> pick_label(0, labels.size() - 1);
  std::uniform_int_distribution<int> offset(-4, 4);
  const std::int64_t kk = spec.translations(j);
  const std::int64_t kt = spec.translations(jt);
  std::uniform_int_distribution<std::int64_t> trans(0, kk - 1);

  NearDiagonalResult out;
  for (int i = 0; i < sample_count; ++i) {
    WaveletIndex a{labels[pick_label(rng)], j, {0, 0}};
    WaveletIndex b{labels[pick_label(rng)], jt, {0, 0}};
    for (int axis = 0; axis < spec.dim; ++axis) {
      const auto ax = static_cast<std::size_t>(axis);
      a.k[ax] = trans(rng);
      // Spatially nearby partner: same position at the other scale.
      const double pos = std::ldexp(static_cast<double>(a.k[ax]), jt - j);
      const auto base = static_cast<std::int64_t>(std::floor(pos));
      b.k[ax] = (((base + offset(rng)) % kt) + kt) % kt;
    }
    for (int ell = 0; ell <= spec.dim; ++ell) {
      const cplx v = grid.spectral_inner_product(
          a, b, [&](const IndexVec& m) { return riesz_symbol(ell, m, spec.dim); });
      out.max_abs = std::max(out.max_abs, std::abs(v));
      ++out.pairs;
    }
  }
  return out;
}

RatioStats riesz_bounded_ratio(const WaveletGrid& grid, double q, int trials, std::uint64_t seed) {
  Rng rng(derive_seed(seed, "riesz_bounded_ratio"));
  RatioStats stats;
  for (int i = 0; i < trials; ++i) {
    const GridFunction f = random_band_limited(grid.spec(), rng);
    const double base = f01q_norm(grid.analyze(f), q);
    if (!(base > 0.0)) continue;
    for (int ell = 1; ell <= grid.spec().dim; ++ell) {
      stats.add(f01q_norm(grid.analyze(riesz_apply(ell, f)), q) / base);
    }
  }
  return stats;
}

}  // namespace tlwavelab
