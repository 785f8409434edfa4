// SPDX-License-Identifier: Apache-2.0
//
// Dense reference evaluations of the discrete F-norms, straight from the
// cube-indicator definitions. Slow; meant for fields with a handful of entries.
#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "tlwavelab/grid.hpp"

namespace tlwavelab::brute {

struct Entry {
  WaveletIndex idx;
  cplx value;
};

inline std::vector<Entry> entries(const CoefficientField& c) {
  std::vector<Entry> out;
  c.for_each([&](const WaveletIndex& i, cplx v) { out.push_back({i, v}); });
  return out;
}

inline bool in_cube(const Entry& e, double x0, double x1, int dim) {
  const double side = std::ldexp(1.0, -e.idx.j);
  if (std::floor(x0 / side) != static_cast<double>(e.idx.k[0])) return false;
  return dim == 1 || std::floor(x1 / side) == static_cast<double>(e.idx.k[1]);
}

// Direct evaluation at the midpoints of a mesh finer than every cube.
inline double brute_f01q(const CoefficientField& c, double q, int fine_level) {
  const GridSpec& spec = c.spec();
  const auto list = entries(c);
  const double h = std::ldexp(1.0, -fine_level);
  const auto n = static_cast<std::int64_t>(spec.period() / h);
  double total = 0.0;
  for (std::int64_t a = 0; a < n; ++a) {
    for (std::int64_t b = 0; b < (spec.dim == 2 ? n : 1); ++b) {
      const double x0 = (a + 0.5) * h;
      const double x1 = (b + 0.5) * h;
      double s = 0.0;
      for (const auto& e : list) {
        if (in_cube(e, x0, x1, spec.dim)) {
          s += std::pow(std::pow(2.0, 0.5 * spec.dim * e.idx.j) * std::abs(e.value), q);
        }
      }
      total += std::pow(s, 1.0 / q);
    }
  }
  return total * std::pow(h, spec.dim);
}

// Enumerate every dyadic cube and test containment directly.
inline double brute_f0infq(const CoefficientField& c, double q, int fine_level) {
  const GridSpec& spec = c.spec();
  const auto list = entries(c);
  double best = 0.0;
  for (int i = -spec.period_exp; i <= fine_level; ++i) {
    const std::int64_t kk = std::int64_t{1} << (i + spec.period_exp);
    for (std::int64_t a = 0; a < kk; ++a) {
      for (std::int64_t b = 0; b < (spec.dim == 2 ? kk : 1); ++b) {
        double s = 0.0;
        for (const auto& e : list) {
          if (e.idx.j < i) continue;
          const std::int64_t shift = std::int64_t{1} << (e.idx.j - i);
          if (e.idx.k[0] / shift != a) continue;
          if (spec.dim == 2 && e.idx.k[1] / shift != b) continue;
          s += std::pow(2.0, e.idx.j * spec.dim * (q / 2 - 1)) * std::pow(std::abs(e.value), q);
        }
        best = std::max(best, s * std::pow(2.0, i * spec.dim));
      }
    }
  }
  return std::pow(best, 1.0 / q);
}

}  // namespace tlwavelab::brute
