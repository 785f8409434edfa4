// SPDX-License-Identifier: Apache-2.0
//
// Norms and functionals from L^2-normalized wavelet coefficients:
//   f01q:   int ( sum_{lambda,j,k} [2^{jD/2} |c| chi_{Q_jk}(x)]^q )^{1/q} dx
//   f0infq: sup_Q ( |Q|^{-1} sum_{Q_jk in Q} 2^{jD(q/2-1)} |c|^q )^{1/q}
// Dyadic cubes live on the torus; the largest one is the torus itself.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "json.hpp"
#include "tlwavelab/grid.hpp"
#include "tlwavelab/stats.hpp"
#include "tlwavelab/wavelet_grid.hpp"

namespace tlwavelab {

double l1_norm(const GridFunction& f);
double linf_norm(const GridFunction& f);

/// Father entries count with the same weight as mothers. Throws for q outside (1, inf).
double f01q_norm(const CoefficientField& c, double q);
double f0infq_functional(const CoefficientField& c, double q);

struct TruncationWindow {
  int s = 0;
  int n = 1;
  int t = 0;
  auto operator<=>(const TruncationWindow&) const = default;
};

struct WeResult {
  double value = 0.0;
  TruncationWindow witness;  // first window (s, N) attaining the sup, with its t
  std::size_t windows = 0;   // number of (s, N) pairs enumerated
};

/// Evaluates the truncated pieces of one field. Scale-range values are cached,
/// so the full window enumeration costs one synthesis per scale.
class WindowEvaluator {
 public:
  /// `c` must be the analysis of `f` on `grid` (checked: same spec, Bessel).
  WindowEvaluator(const WaveletGrid& grid, const CoefficientField& c, const GridFunction& f,
                  double q);

  double f01q_range(int lo, int hi);
  double f0infq_range(int lo, int hi);
  double l1_range(int lo, int hi);
  double linf_range(int lo, int hi);

  /// sup_{s,N} min_t [ f01q(T1) + l1(T2) ], ties in t to the smaller t.
  WeResult we1q();
  /// sup_{s,N} sup_t [ f0infq(T1) + linf(T2) ].
  WeResult weinfq();

 private:
  using Range = std::pair<int, int>;
  std::optional<Range> clamp(int lo, int hi) const;
  const GridFunction& slice(int j);
  GridFunction range_function(Range r);

  const WaveletGrid& grid_;
  const CoefficientField& c_;
  double q_;
  std::map<int, GridFunction> slices_;
  std::map<Range, double> f01q_cache_, f0infq_cache_, l1_cache_, linf_cache_;
};

WeResult we1q_norm(const WaveletGrid& grid, const CoefficientField& c, const GridFunction& f,
                   double q);
WeResult weinfq_norm(const WaveletGrid& grid, const CoefficientField& c, const GridFunction& f,
                     double q);

struct SumSpaceBound {
  double value = 0.0;  // upper bound on the inf-convolution norm
  std::optional<int> cut;  // tau of the best scale split; empty for a trivial split
  std::string split;       // "l1", "f01q" or "cut"
};

/// min over g = scales >= tau of l1(f - g) + f01q(g), plus g = 0 and g = f.
SumSpaceBound sum_space_upper(const WaveletGrid& grid, const CoefficientField& c,
                              const GridFunction& f, double q);

/// max over random fields and scales j of f01q(Q_j, 2) / we1q.
RatioStats qj_h1_ratio(const WaveletGrid& grid, double q, int trials, std::uint64_t seed);

struct NormReport {
  std::string name;
  double value = 0.0;
  double q = 0.0;
  std::optional<TruncationWindow> window;
  std::string notes;
};

nlohmann::ordered_json to_json(const NormReport& r);

}  // namespace tlwavelab
