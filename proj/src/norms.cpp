// SPDX-License-Identifier: Apache-2.0
#include "tlwavelab/norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tlwavelab/projections.hpp"
#include "tlwavelab/random.hpp"

namespace tlwavelab {
namespace {

void check_q(double q) {
  if (!(q > 1.0) || !std::isfinite(q)) throw std::invalid_argument("q must lie in (1, inf)");
}

// Finest populated scale over all channels (father included).
std::optional<int> finest_scale(const CoefficientField& c) {
  std::optional<int> top;
  for (const auto& [key, block] : c.channels()) {
    const bool any = std::any_of(block.begin(), block.end(),
                                 [](cplx v) { return v != cplx(0.0, 0.0); });
    if (any) top = top ? std::max(*top, key.j) : key.j;
  }
  return top;
}

// Per-cube sums over labels of weight(j) |c|^q at scale j.
std::map<int, std::vector<double>> cube_sums(const CoefficientField& c, double q,
                                             double exponent_per_dj) {
  std::map<int, std::vector<double>> out;
  const int dim = c.spec().dim;
  for (const auto& [key, block] : c.channels()) {
    auto& s = out[key.j];
    if (s.empty()) s.assign(block.size(), 0.0);
    const double w = std::exp2(exponent_per_dj * dim * key.j);
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (block[i] != cplx(0.0, 0.0)) s[i] += w * std::pow(std::abs(block[i]), q);
    }
  }
  return out;
}

}  // namespace

double l1_norm(const GridFunction& f) {
  double s = 0.0;
  for (const cplx v : f.samples) s += std::abs(v);
  return s * f.spec.cell_volume();
}

double linf_norm(const GridFunction& f) {
  double m = 0.0;
  for (const cplx v : f.samples) m = std::max(m, std::abs(v));
  return m;
}

double f01q_norm(const CoefficientField& c, double q) {
  check_q(q);
  const auto top = finest_scale(c);
  if (!top) return 0.0;
  const GridSpec& spec = c.spec();
  const int dim = spec.dim;
  const std::int64_t fine = spec.translations(*top);
  std::vector<double> acc(static_cast<std::size_t>(dim == 1 ? fine : fine * fine), 0.0);

  for (const auto& [j, sums] : cube_sums(c, q, 0.5 * q)) {
    const int shift = *top - j;
    if (shift < 0) continue;  // all-zero channel above the finest populated scale
    const std::int64_t kk = spec.translations(j);
    if (dim == 1) {
      for (std::int64_t i = 0; i < fine; ++i) acc[static_cast<std::size_t>(i)] += sums[static_cast<std::size_t>(i >> shift)];
    } else {
      for (std::int64_t i0 = 0; i0 < fine; ++i0) {
        const double* row = sums.data() + (i0 >> shift) * kk;
        double* out = acc.data() + i0 * fine;
        for (std::int64_t i1 = 0; i1 < fine; ++i1) out[i1] += row[i1 >> shift];
      }
    }
  }
  double total = 0.0;
  const double inv_q = 1.0 / q;
  for (const double a : acc) {
    if (a > 0.0) total += std::pow(a, inv_q);
  }
  return total * std::exp2(-static_cast<double>(dim) * *top);
}

double f0infq_functional(const CoefficientField& c, double q) {
  check_q(q);
  const auto top = finest_scale(c);
  if (!top) return 0.0;
  const GridSpec& spec = c.spec();
  const int dim = spec.dim;
  auto sums = cube_sums(c, q, 0.5 * q - 1.0);

  std::vector<double> level;  // subtree totals at the current scale
  double best = 0.0;
  for (int j = *top; j >= -spec.period_exp; --j) {
    const std::int64_t kk = spec.translations(j);
    std::vector<double> cur(static_cast<std::size_t>(dim == 1 ? kk : kk * kk), 0.0);
    if (auto it = sums.find(j); it != sums.end()) cur = it->second;
    if (!level.empty()) {
      const std::int64_t child = 2 * kk;
      if (dim == 1) {
        for (std::int64_t i = 0; i < child; ++i) cur[static_cast<std::size_t>(i / 2)] += level[static_cast<std::size_t>(i)];
      } else {
        for (std::int64_t i0 = 0; i0 < child; ++i0) {
          for (std::int64_t i1 = 0; i1 < child; ++i1) {
            cur[static_cast<std::size_t>((i0 / 2) * kk + i1 / 2)] +=
                level[static_cast<std::size_t>(i0 * child + i1)];
          }
        }
      }
    }
    const double inv_volume = std::exp2(static_cast<double>(dim) * j);
    for (const double t : cur) best = std::max(best, inv_volume * t);
    level = std::move(cur);
  }
  return std::pow(best, 1.0 / q);
}

WindowEvaluator::WindowEvaluator(const WaveletGrid& grid, const CoefficientField& c,
                                 const GridFunction& f, double q)
    : grid_(grid), c_(c), q_(q) {
  check_q(q);
  if (!(c.spec() == grid.spec()) || !(f.spec == grid.spec())) {
    throw std::invalid_argument("coefficient field and grid function live on different grids");
  }
  const double energy = f.l2_norm();
  if (c.energy() > energy * energy * (1.0 + 1e-8) + 1e-20) {
    throw std::invalid_argument("coefficient field is not the analysis of the grid function");
  }
}

std::optional<WindowEvaluator::Range> WindowEvaluator::clamp(int lo, int hi) const {
  lo = std::max(lo, c_.spec().j_lo);
  hi = std::min(hi, c_.spec().j_hi);
  if (lo > hi) return std::nullopt;
  return Range{lo, hi};
}

const GridFunction& WindowEvaluator::slice(int j) {
  auto it = slices_.find(j);
  if (it == slices_.end()) it = slices_.emplace(j, grid_.synthesize(project_Qj(c_, j))).first;
  return it->second;
}

GridFunction WindowEvaluator::range_function(Range r) {
  GridFunction g(grid_.spec());
  for (int j = r.first; j <= r.second; ++j) g += slice(j);
  return g;
}

double WindowEvaluator::f01q_range(int lo, int hi) {
  const auto r = clamp(lo, hi);
  if (!r) return 0.0;
  if (auto it = f01q_cache_.find(*r); it != f01q_cache_.end()) return it->second;
  const double v = f01q_norm(c_.restrict_scales(r->first, r->second), q_);
  return f01q_cache_[*r] = v;
}

double WindowEvaluator::f0infq_range(int lo, int hi) {
  const auto r = clamp(lo, hi);
  if (!r) return 0.0;
  if (auto it = f0infq_cache_.find(*r); it != f0infq_cache_.end()) return it->second;
  const double v = f0infq_functional(c_.restrict_scales(r->first, r->second), q_);
  return f0infq_cache_[*r] = v;
}

double WindowEvaluator::l1_range(int lo, int hi) {
  const auto r = clamp(lo, hi);
  if (!r) return 0.0;
  if (auto it = l1_cache_.find(*r); it != l1_cache_.end()) return it->second;
  const double v = l1_norm(range_function(*r));
  return l1_cache_[*r] = v;
}

double WindowEvaluator::linf_range(int lo, int hi) {
  const auto r = clamp(lo, hi);
  if (!r) return 0.0;
  if (auto it = linf_cache_.find(*r); it != linf_cache_.end()) return it->second;
  const double v = linf_norm(range_function(*r));
  return linf_cache_[*r] = v;
}

WeResult WindowEvaluator::we1q() {
  const GridSpec& spec = c_.spec();
  WeResult out;
  bool have = false;
  for (int s = spec.j_lo - 1; s <= spec.j_hi + 1; ++s) {
    for (int n = 1; n <= spec.j_hi - spec.j_lo + 2; ++n) {
      ++out.windows;
      double best = 0.0;
      int best_t = 0;
      for (int t = 0; t <= n + 1; ++t) {
        const double v = f01q_range(s - t + 1, s) + l1_range(s - n, s - t);
        if (t == 0 || v < best) {
          best = v;
          best_t = t;
        }
      }
      if (!have || best > out.value) {
        out.value = best;
        out.witness = {s, n, best_t};
        have = true;
      }
    }
  }
  return out;
}

WeResult WindowEvaluator::weinfq() {
  const GridSpec& spec = c_.spec();
  WeResult out;
  bool have = false;
  for (int s = spec.j_lo - 1; s <= spec.j_hi + 1; ++s) {
    for (int n = 1; n <= spec.j_hi - spec.j_lo + 2; ++n) {
      ++out.windows;
      for (int t = 0; t <= n + 1; ++t) {
        const double v = f0infq_range(s - t + 1, s) + linf_range(s - n, s - t);
        if (!have || v > out.value) {
          out.value = v;
          out.witness = {s, n, t};
          have = true;
        }
      }
    }
  }
  return out;
}

WeResult we1q_norm(const WaveletGrid& grid, const CoefficientField& c, const GridFunction& f,
                   double q) {
  return WindowEvaluator(grid, c, f, q).we1q();
}

WeResult weinfq_norm(const WaveletGrid& grid, const CoefficientField& c, const GridFunction& f,
                     double q) {
  return WindowEvaluator(grid, c, f, q).weinfq();
}

SumSpaceBound sum_space_upper(const WaveletGrid& grid, const CoefficientField& c,
                              const GridFunction& f, double q) {
  check_q(q);
  if (!(c.spec() == grid.spec()) || !(f.spec == grid.spec())) {
    throw std::invalid_argument("coefficient field and grid function live on different grids");
  }
  const GridSpec& spec = c.spec();
  SumSpaceBound best{l1_norm(f), std::nullopt, "l1"};
  if (const double v = f01q_norm(c, q); v < best.value) best = {v, std::nullopt, "f01q"};

  // tau = j_lo keeps only the father in L^1; tau = j_hi + 1 moves everything there.
  for (int tau = spec.j_lo; tau <= spec.j_hi + 1; ++tau) {
    const CoefficientField low = c.restrict_scales(spec.j_lo, tau - 1, true);
    const CoefficientField high = c.restrict_scales(tau, spec.j_hi);
    const double v = l1_norm(grid.synthesize(low)) + f01q_norm(high, q);
    if (v < best.value) best = {v, tau, "cut"};
  }
  return best;
}

RatioStats qj_h1_ratio(const WaveletGrid& grid, double q, int trials, std::uint64_t seed) {
  if (q < 2.0) throw std::invalid_argument("qj_h1_ratio: q must be >= 2");
  Rng rng(derive_seed(seed, "qj_h1_ratio"));
  RatioStats stats;
  for (int i = 0; i < trials; ++i) {
    const GridFunction f = random_band_limited(grid.spec(), rng);
    const CoefficientField c = grid.analyze(f);
    WindowEvaluator eval(grid, c, f, q);
    const double we = eval.we1q().value;
    if (!(we > 0.0)) continue;
    double worst = 0.0;
    for (int j = grid.spec().j_lo; j <= grid.spec().j_hi; ++j) {
      worst = std::max(worst, f01q_norm(project_Qj(c, j), 2.0) / we);
    }
    stats.add(worst);
  }
  return stats;
}

nlohmann::ordered_json to_json(const NormReport& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["value"] = r.value;
  if (r.q > 0.0) j["q"] = r.q;
  if (r.window) j["window"] = {{"s", r.window->s}, {"N", r.window->n}, {"t", r.window->t}};
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

}  // namespace tlwavelab
