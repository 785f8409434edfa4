// SPDX-License-Identifier: Apache-2.0
#include "tlwavelab/grid.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace tlwavelab;

TEST(GridSpec, WidestWindowAndValidation) {
  const GridSpec s = GridSpec::make(1, 5, 14);
  EXPECT_EQ(s.j_lo, -4);
  EXPECT_EQ(s.j_hi, 7);
  EXPECT_EQ(s.period(), 32.0);
  EXPECT_EQ(s.samples_per_axis(), 16384);
  EXPECT_EQ(s.translations(-4), 2);
  EXPECT_THROW(GridSpec::make(1, 5, 14, -4, 8), std::invalid_argument);
  EXPECT_THROW(GridSpec::make(1, 5, 14, -5, 7), std::invalid_argument);
  EXPECT_THROW(GridSpec::make(1, 5, 14, 3, 2), std::invalid_argument);
  EXPECT_THROW(GridSpec::make(3, 5, 14), std::invalid_argument);
  EXPECT_THROW(GridSpec::make(2, 3, 15), std::invalid_argument);
}

TEST(GridSpec, FrequencyLayout) {
  const GridSpec s = GridSpec::make(1, 2, 4);
  EXPECT_EQ(s.signed_frequency(0), 0);
  EXPECT_EQ(s.signed_frequency(7), 7);
  EXPECT_EQ(s.signed_frequency(8), -8);
  EXPECT_EQ(s.signed_frequency(15), -1);
  EXPECT_EQ(s.fft_position(-1), 15);
  EXPECT_EQ(s.fft_position(3), 3);
}

TEST(GridFunction, SpectrumOfToneAndRoundTrip) {
  const GridSpec s = GridSpec::make(1, 3, 7);
  // e^{i 2 pi 3 x / L}
  GridFunction f(s);
  for (std::size_t i = 0; i < f.samples.size(); ++i) {
    f.samples[i] = std::polar(1.0, kTwoPi * 3 * f.point(i)[0] / s.period());
  }
  const SpectralFunction sp = to_spectrum(f);
  EXPECT_NEAR(std::abs(sp.coeffs[3] - cplx(1.0, 0.0)), 0.0, 1e-13);
  double rest = 0.0;
  for (std::size_t i = 0; i < sp.coeffs.size(); ++i) {
    if (i != 3) rest = std::max(rest, std::abs(sp.coeffs[i]));
  }
  EXPECT_LT(rest, 1e-13);
  EXPECT_NEAR(f.l2_norm(), std::sqrt(s.period()), 1e-12);
  EXPECT_NEAR(sp.l2_norm(), f.l2_norm(), 1e-12);
  const GridFunction back = to_grid(sp);
  EXPECT_LT((back - f).l2_norm(), 1e-12);
}

TEST(GridFunction, InnerProduct2D) {
  const GridSpec s = GridSpec::make(2, 2, 5);
  const auto f = GridFunction::from_real(s, [](std::span<const double> x) {
    return std::cos(kTwoPi * x[0] / 4.0) * std::sin(kTwoPi * 2 * x[1] / 4.0);
  });
  EXPECT_NEAR(inner_product(f, f).real(), 16.0 / 4.0, 1e-12);
  EXPECT_EQ(f.point(33)[0], s.spacing());
  EXPECT_EQ(f.point(33)[1], s.spacing());
}

TEST(CoefficientField, IndexingAndScaleQueries) {
  const GridSpec s = GridSpec::make(1, 3, 9);
  CoefficientField c(s);
  EXPECT_TRUE(c.empty());
  c.set({TensorLabel{1}, 0, {3, 0}}, {1.0, 2.0});
  c.add({TensorLabel{1}, 0, {11, 0}}, {1.0, 0.0});  // wraps to k = 3
  EXPECT_EQ(c.get({TensorLabel{1}, 0, {3, 0}}), cplx(2.0, 2.0));
  c.set({TensorLabel::father(), s.j_lo, {0, 0}}, 0.5);
  c.set({TensorLabel{1}, 2, {1, 0}}, -1.0);
  EXPECT_EQ(c.nonzero_count(), 3u);
  EXPECT_EQ(*c.min_mother_scale(), 0);
  EXPECT_EQ(*c.max_mother_scale(), 2);
  EXPECT_NEAR(c.energy(), 8.0 + 0.25 + 1.0, 1e-15);
  EXPECT_THROW(c.set({TensorLabel::father(), 0, {0, 0}}, 1.0), std::invalid_argument);
  EXPECT_THROW(c.set({TensorLabel{1}, 5, {0, 0}}, 1.0), std::invalid_argument);
  EXPECT_THROW(c.set({TensorLabel{2}, 0, {0, 0}}, 1.0), std::invalid_argument);

  const auto r = c.restrict_scales(1, 4);
  EXPECT_EQ(r.nonzero_count(), 1u);
  EXPECT_EQ(c.restrict_scales(-10, 10, true).nonzero_count(), 3u);

  std::vector<WaveletIndex> seen;
  c.for_each([&](const WaveletIndex& i, cplx) { seen.push_back(i); });
  ASSERT_EQ(seen.size(), 3u);
  EXPECT_TRUE(seen[0].label.is_father());
  EXPECT_EQ(seen[2].j, 2);
}
