// SPDX-License-Identifier: Apache-2.0
#include "tlwavelab/daubechies.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace tlwavelab;

TEST(DaubechiesFilter, KnownD4Taps) {
  const auto f = DaubechiesFilter::make(2);
  const double s3 = std::sqrt(3.0);
  const double d = 4 * std::sqrt(2.0);
  ASSERT_EQ(f.h.size(), 4u);
  // Extremal-phase D4, mass towards the left end of [0, 3].
  const std::vector<double> a{(1 + s3) / d, (3 + s3) / d, (3 - s3) / d, (1 - s3) / d};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(f.h[i], a[i], 1e-12);
}

TEST(DaubechiesFilter, SumAndOrthogonality) {
  for (const int p : {2, 6, 10, 16, 20}) {
    const auto f = DaubechiesFilter::make(p);
    double s = 0.0;
    for (const double v : f.h) s += v;
    EXPECT_NEAR(s, std::sqrt(2.0), 1e-12) << p;
    EXPECT_LE(f.orthogonality_error(), 1e-12) << p;
    // p vanishing moments of the high-pass filter.
    for (int m = 0; m < p; m += 3) {
      long double moment = 0.0L;
      for (std::size_t k = 0; k < f.h.size(); ++k) {
        moment += ((k % 2) ? -1.0L : 1.0L) * std::pow(static_cast<long double>(k), m) * f.h[k];
      }
      EXPECT_LE(std::abs(static_cast<double>(moment)), 1e-9 * std::pow(2.0 * p, m)) << p << " " << m;
    }
  }
}

TEST(DaubechiesScaling, PartitionOfUnityAndIntegral) {
  const auto phi = daubechies_scaling(16, 10);
  const std::size_t per_unit = std::size_t{1} << phi.levels;
  EXPECT_EQ(phi.values.size(), 31 * per_unit + 1);
  double integral = 0.0;
  for (const double v : phi.values) integral += v;
  EXPECT_NEAR(integral * phi.step(), 1.0, 1e-8);
  for (std::size_t r = 0; r < per_unit; ++r) {
    double s = 0.0;
    for (std::size_t i = r; i < phi.values.size(); i += per_unit) s += phi.values[i];
    ASSERT_NEAR(s, 1.0, 1e-6) << r;
  }
  EXPECT_EQ(phi.values.front(), 0.0);
  EXPECT_EQ(phi.values.back(), 0.0);
}

TEST(DaubechiesScaling, InterpolationReproducesSamples) {
  const auto phi = daubechies_scaling(10, 9);
  for (const std::size_t i : {100ul, 2000ul, 5000ul}) {
    EXPECT_NEAR(phi(static_cast<double>(i) * phi.step()), phi.values[i], 1e-14);
  }
  // Finer cascade agrees with interpolated coarse samples.
  const auto fine = daubechies_scaling(10, 11);
  for (const double x : {1.2345, 3.3, 7.77}) EXPECT_NEAR(phi(x), fine(x), 1e-6);
  EXPECT_EQ(phi(-0.1), 0.0);
  EXPECT_EQ(phi(19.5), 0.0);
}

TEST(DaubechiesScaling, RefinementResidualDecreases) {
  const auto phi = daubechies_scaling(16, 12);
  for (std::size_t l = 1; l < phi.refinement.size(); ++l) {
    EXPECT_LT(phi.refinement[l], phi.refinement[l - 1]);
  }
}

TEST(DaubechiesScaling, PreconditionsRejectRoughOrShallow) {
  EXPECT_THROW(daubechies_scaling(2, 12), std::invalid_argument);
  EXPECT_THROW(daubechies_scaling(16, 4), std::invalid_argument);
  // The rough order-2 function is still available as a negative control.
  const auto haarish = daubechies_cascade(2, 10);
  double mx = 0.0;
  for (const double v : haarish.values) mx = std::max(mx, v);
  EXPECT_NEAR(mx, (1 + std::sqrt(3.0)) / 2, 1e-12);
}

// Frozen from tests/oracles/daubechies_oracle.py (PyWavelets taps, numpy cascade).
TEST(DaubechiesScaling, MatchesIndependentCascade) {
  const auto phi = daubechies_scaling(16, 12);
  double peak = 0.0;
  double moment = 0.0;
  for (std::size_t i = 0; i < phi.values.size(); ++i) {
    peak = std::max(peak, phi.values[i]);
    moment += static_cast<double>(i) * phi.step() * phi.values[i] * phi.step();
  }
  EXPECT_NEAR(peak, 0.8858729609234159, 1e-8);
  EXPECT_NEAR(moment, 3.2450435667088406, 1e-9);
  // The first moment also follows from the taps: sum_k k h_k / sqrt2.
  double from_taps = 0.0;
  for (std::size_t k = 0; k < phi.filter.h.size(); ++k) from_taps += static_cast<double>(k) * phi.filter.h[k];
  EXPECT_NEAR(moment, from_taps / std::sqrt(2.0), 1e-9);
}
