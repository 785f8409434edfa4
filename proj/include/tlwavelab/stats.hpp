// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <vector>

namespace tlwavelab {

/// Empirical summary of a sequence of ratios.
struct RatioStats {
  std::vector<double> values;

  void add(double v) { values.push_back(v); }
  std::size_t count() const { return values.size(); }
  bool empty() const { return values.empty(); }
  double min() const {
    return empty() ? std::numeric_limits<double>::quiet_NaN()
                   : *std::min_element(values.begin(), values.end());
  }
  double max() const {
    return empty() ? std::numeric_limits<double>::quiet_NaN()
                   : *std::max_element(values.begin(), values.end());
  }
  double mean() const {
    if (empty()) return std::numeric_limits<double>::quiet_NaN();
    double s = 0.0;
    for (const double v : values) s += v;
    return s / static_cast<double>(values.size());
  }
  double spread() const { return max() / min(); }
};

}  // namespace tlwavelab
