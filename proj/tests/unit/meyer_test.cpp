// SPDX-License-Identifier: Apache-2.0
#include "tlwavelab/meyer.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cmath>

using namespace tlwavelab;

namespace {

const MeyerSystem& meyer() {
  static const MeyerSystem m = MeyerSystem::standard(1);
  return m;
}

}  // namespace

TEST(Bump, FValues) {
  EXPECT_EQ(eval_f(0.0), 0.0);
  EXPECT_EQ(eval_f(-3.0), 0.0);
  EXPECT_NEAR(eval_f(1.0), std::exp(-1.0), 1e-16);
}

TEST(Bump, GEndpointsAndMidpoint) {
  EXPECT_EQ(eval_g(0.0, 1e-12), 0.0);
  EXPECT_EQ(eval_g(1.0, 1e-12), 1.0);
  EXPECT_NEAR(eval_g(0.5, 1e-12), 0.5, 1e-11);
  EXPECT_EQ(eval_g(-0.2, 1e-12), 0.0);
  EXPECT_EQ(eval_g(1.7, 1e-12), 1.0);
}

TEST(Bump, GMonotone) {
  const double tol = 1e-11;
  double prev = 0.0;
  for (int i = 1; i <= 200; ++i) {
    const double v = eval_g(i / 200.0, tol);
    EXPECT_LE(prev, v + 2 * tol);
    prev = v;
  }
}

TEST(Bump, FrozenOracleValues) {
  EXPECT_NEAR(eval_g(0.25, 1e-11), 2.4304821914752189e-6, 1e-10);
  EXPECT_NEAR(eval_g(0.3, 1e-11), 0.00042784427805700614, 1e-10);
  EXPECT_NEAR(eval_g(0.7, 1e-11), 0.99957215572194299, 1e-10);
  EXPECT_NEAR(MeyerSystem::standard(1).bump().normalizer(), 5.7925610611727851e-5, 1e-15);
}

TEST(BumpProfile, InvariantsAndAgreementWithDirectQuadrature) {
  const BumpProfile& b = meyer().bump();
  ASSERT_EQ(b.values().front(), 0.0);
  ASSERT_EQ(b.values().back(), 1.0);
  for (std::size_t i = 1; i < b.values().size(); ++i) EXPECT_LE(b.values()[i - 1], b.values()[i]);
  for (int i = 0; i <= 400; ++i) {
    const double x = i / 400.0;
    EXPECT_NEAR(b(x) + b(1.0 - x), 1.0, 2 * b.quad_tol() + 1e-15) << x;
  }
  for (const double x : {0.1, 0.25, 0.3, 0.5, 0.7, 0.9, 0.123456}) {
    EXPECT_NEAR(b(x), eval_g(x, 1e-12), 1e-9) << x;
  }
}

TEST(Phi, PointValues) {
  EXPECT_DOUBLE_EQ(meyer().phi_hat(0.0), kInvSqrtTwoPi);
  EXPECT_EQ(meyer().phi_hat(4 * kPi / 3), 0.0);
  EXPECT_NEAR(meyer().phi_hat(kPi), 0.5 / std::sqrt(kPi), 1e-10);
  EXPECT_EQ(meyer().phi_hat(2 * kPi / 3), kInvSqrtTwoPi);
  EXPECT_NEAR(meyer().phi_hat(3.0), 0.38645425080772437, 1e-10);
  EXPECT_NEAR(meyer().phi_hat(3.5), 0.0019188756703591928, 1e-10);
}

TEST(Phi, PartitionIdentityEvenAndBounded) {
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double xi = kTwoPi * i / 9999.0;
    const double a = meyer().phi_hat(xi);
    const double b = meyer().phi_hat(xi - kTwoPi);
    worst = std::max(worst, std::abs(a * a + b * b - 1.0 / kTwoPi));
    EXPECT_EQ(a, meyer().phi_hat(-xi));
    EXPECT_GE(a, 0.0);
    EXPECT_LE(a, kInvSqrtTwoPi);
  }
  EXPECT_LE(worst, 1e-9);
}

TEST(MPhi, Values) {
  EXPECT_NEAR(meyer().m_phi(0.0), 1.0, 1e-15);
  EXPECT_NEAR(meyer().m_phi(kTwoPi), 1.0, 1e-15);
  EXPECT_EQ(meyer().m_phi(2 * kPi / 3), 0.0);
  for (const double xi : {0.3, 1.1, 2.9, -2.0}) {
    EXPECT_NEAR(meyer().m_phi(xi + kTwoPi), meyer().m_phi(xi), 1e-14);
  }
}

TEST(PsiHat, SupportAndEdgeValue) {
  EXPECT_EQ(meyer().psi_hat(kPi / 2), cplx(0.0, 0.0));
  EXPECT_EQ(meyer().psi_hat(3 * kPi), cplx(0.0, 0.0));
  const cplx v = meyer().psi_hat(4 * kPi / 3);
  EXPECT_NEAR(v.real(), std::cos(2 * kPi / 3) * kInvSqrtTwoPi, 1e-12);
  EXPECT_NEAR(v.imag(), std::sin(2 * kPi / 3) * kInvSqrtTwoPi, 1e-12);
  for (int i = 0; i <= 2000; ++i) {
    const double a = (2 * kPi / 3 - 1e-12) * i / 2000.0;
    EXPECT_EQ(meyer().psi_hat(a), cplx(0.0, 0.0));
    EXPECT_EQ(meyer().psi_hat(-a), cplx(0.0, 0.0));
    const double b = 8 * kPi / 3 + 1e-12 + i * 0.01;
    EXPECT_EQ(meyer().psi_hat(b), cplx(0.0, 0.0));
    EXPECT_EQ(meyer().psi_hat(-b), cplx(0.0, 0.0));
  }
  for (int i = 0; i <= 500; ++i) {
    const double xi = 0.01 + i * 0.02;
    EXPECT_NEAR(std::abs(meyer().psi_hat(xi)), std::abs(meyer().psi_hat(-xi)), 1e-14);
  }
}

TEST(TensorPsiHat, Products) {
  const MeyerSystem m2 = MeyerSystem(meyer().bump(), 2);
  const std::array<double, 2> zero{0.0, 0.0};
  EXPECT_NEAR(std::abs(m2.tensor_psi_hat(TensorLabel::father(), zero)), 1.0 / kTwoPi, 1e-15);
  const std::array<double, 2> low{kPi / 2, 0.0};
  EXPECT_EQ(m2.tensor_psi_hat(TensorLabel{1}, low), cplx(0.0, 0.0));
  const std::array<double, 2> edge{4 * kPi / 3, 4 * kPi / 3};
  EXPECT_NEAR(std::abs(m2.tensor_psi_hat(TensorLabel{3}, edge)), 1.0 / kTwoPi, 1e-12);
}

TEST(PsiSpace, SymmetryAboutMinusHalf) {
  for (const double x : {0.3, 1.7, 4.2}) {
    EXPECT_NEAR(eval_psi_space(meyer(), -0.5 + x, 1e-11), eval_psi_space(meyer(), -0.5 - x, 1e-11),
                1e-10);
  }
}

TEST(PsiSpace, FrozenOracleValues) {
  // Independent mpmath evaluation (tests/oracles/meyer_oracle.py).
  EXPECT_NEAR(eval_psi_space(meyer(), 0.0, 1e-11), -0.67583222439780223, 1e-9);
  EXPECT_NEAR(eval_psi_space(meyer(), 1.0, 1e-11), 0.16997504558111571, 1e-9);
  EXPECT_NEAR(eval_psi_space(meyer(), 2.0, 1e-11), -0.1546320487023174, 1e-9);
  EXPECT_NEAR(eval_phi_space(meyer(), 1.0, 1e-11), -0.020281593378836635, 1e-9);
  EXPECT_NEAR(eval_phi_space(meyer(), 8.0, 1e-11), 0.012624759154902524, 1e-9);
}

TEST(PsiSpace, MatchesInverseTransformOfPsiHat) {
  // Fine Riemann sum of (1/sqrt(2pi)) int psi_hat(xi) e^{i x xi}; the
  // integrand is smooth and compactly supported so the sum converges fast.
  const double tol = 1e-11;
  for (const double x : {-2.0, 0.0, 0.5, 3.0}) {
    const int n = 1 << 14;
    const double a = -8 * kPi / 3;
    const double h = (16 * kPi / 3) / n;
    cplx s = 0.0;
    for (int i = 0; i <= n; ++i) {
      const double xi = a + i * h;
      s += meyer().psi_hat(xi) * std::polar(1.0, x * xi);
    }
    s *= h * kInvSqrtTwoPi;
    EXPECT_NEAR(s.real(), eval_psi_space(meyer(), x, tol), 10 * tol) << x;
    EXPECT_NEAR(s.imag(), 0.0, 10 * tol);
  }
}

TEST(PsiZero, ModulusBoundHoldsAndSignIsNegative) {
  const PsiZeroReport r = psi_zero_lower_bound(meyer(), 1e-11);
  EXPECT_NEAR(r.g_half, 0.5, 1e-11);
  EXPECT_NEAR(r.bound, std::sqrt(3.0) / kPi * std::cos(kPi / 4), 1e-10);
  EXPECT_NEAR(r.psi0, r.j1 + r.j2 + r.j3, 1e-10);
  EXPECT_GE(r.margin, -r.quad_tol);
  EXPECT_GE(std::abs(r.psi0), r.bound - 1e-6);
  // With psi_hat(xi) = e^{i xi/2} m_phi(xi/2 + pi) Phi(xi/2) the value is negative.
  EXPECT_LT(r.psi0, 0.0);
}

TEST(TensorLabel, MotherLabels) {
  EXPECT_EQ(mother_labels(1).size(), 1u);
  EXPECT_EQ(mother_labels(2).size(), 3u);
  for (const auto l : mother_labels(2)) {
    EXPECT_TRUE(l.is_mother());
    EXPECT_TRUE(l.valid_for(2));
  }
  EXPECT_FALSE(TensorLabel{4}.valid_for(2));
}
