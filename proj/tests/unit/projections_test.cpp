// SPDX-License-Identifier: Apache-2.0
#include "tlwavelab/projections.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace tlwavelab;

namespace {

CoefficientField sample_field() {
  CoefficientField c(GridSpec::make(1, 4, 12));  // scales -3 .. 6
  c.set({TensorLabel::father(), -3, {1, 0}}, 2.0);
  for (const int j : {-2, 0, 3}) c.set({TensorLabel{1}, j, {1, 0}}, 1.0 + j);
  return c;
}

std::set<int> scales(const CoefficientField& c) {
  std::set<int> out;
  c.for_each([&](const WaveletIndex& i, cplx) { out.insert(i.label.is_father() ? 99 : i.j); });
  return out;
}

}  // namespace

TEST(Projections, PsN) {
  const auto c = sample_field();
  EXPECT_EQ(scales(project_P_sN(c, 0, 2)), (std::set<int>{-2, 0}));
  EXPECT_EQ(scales(project_P_sN(c, 10, 20)), (std::set<int>{-2, 0, 3}));
  EXPECT_TRUE(project_P_sN(c, -5, 0).empty());
}

TEST(Projections, T1T2PartitionEveryT) {
  const auto c = sample_field();
  const int s = 3;
  const int n = 6;
  for (int t = 0; t <= n + 1; ++t) {
    const auto a = scales(op_T1(c, s, t, n));
    const auto b = scales(op_T2(c, s, t, n));
    std::set<int> both = a;
    both.insert(b.begin(), b.end());
    EXPECT_EQ(both.size(), a.size() + b.size());
    EXPECT_EQ(both, scales(project_P_sN(c, s, n)));
    CoefficientField sum = op_T1(c, s, t, n);
    sum += op_T2(c, s, t, n);
    EXPECT_EQ(sum.energy(), project_P_sN(c, s, n).energy());
  }
  EXPECT_TRUE(op_T1(c, s, 0, n).empty());
  EXPECT_EQ(scales(op_T2(c, s, 0, n)), scales(project_P_sN(c, s, n)));
  EXPECT_TRUE(op_T2(c, s, n + 1, n).empty());
  EXPECT_EQ(scales(op_T1(c, s, n + 1, n)), scales(project_P_sN(c, s, n)));
  EXPECT_THROW(op_T1(c, s, -1, n), std::invalid_argument);
  EXPECT_THROW(op_T2(c, s, n + 2, n), std::invalid_argument);
}

TEST(Projections, Qj) {
  const auto c = sample_field();
  EXPECT_TRUE(project_Qj(c, 1).empty());
  EXPECT_TRUE(project_Qj(c, 40).empty());
  EXPECT_EQ(scales(project_Qj(c, 3)), (std::set<int>{3}));
  CoefficientField total(c.spec());
  for (int j = c.spec().j_lo; j <= c.spec().j_hi; ++j) total += project_Qj(c, j);
  EXPECT_EQ(total.energy(), project_P_sN(c, 100, 200).energy());
}
