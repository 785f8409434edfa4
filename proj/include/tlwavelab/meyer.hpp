// SPDX-License-Identifier: Apache-2.0
//
// One-dimensional Meyer wavelet built from the smooth bump
// f1(x) = e^{-1/x^2} e^{-1/(1-x)^2} and its D-dimensional tensor generators.
// Fourier conventions are unitary: f^(xi) = (2pi)^{-D/2} int e^{-i xi x} f(x) dx.
#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace tlwavelab {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;
/// 1/sqrt(2pi), the plateau value of Phi.
inline constexpr double kInvSqrtTwoPi = 0.39894228040143267794;

/// Tensor label lambda in {0,1}^D stored as a bit mask; bit l is lambda_l.
/// The all-zero label is the father generator.
struct TensorLabel {
  unsigned bits = 0;

  static constexpr TensorLabel father() { return {0}; }
  constexpr bool is_father() const { return bits == 0; }
  constexpr bool is_mother() const { return bits != 0; }
  constexpr bool component(int axis) const { return (bits >> axis) & 1U; }
  constexpr bool valid_for(int dim) const { return bits < (1U << dim); }
  auto operator<=>(const TensorLabel&) const = default;
};

/// E_D = {0,1}^D minus the zero vector, in increasing bit order.
std::vector<TensorLabel> mother_labels(int dim);

/// e^{-1/x^2} for x > 0, zero otherwise.
double eval_f(double x);

/// The symmetric bump f(x) f(1-x).
double eval_f1(double x);

/// Normalized cumulative integral of f1, computed directly by adaptive
/// quadrature with absolute error at most `tol`. Clamps to {0, 1} outside
/// [0, 1]. Throws QuadratureError if the tolerance cannot be met.
double eval_g(double x, double tol);

/// Tabulated g: Chebyshev-distributed nodes on [0,1], values from cumulative
/// quadrature, monotone cubic Hermite interpolation using the exact
/// derivative g' = f1 / normalizer.
class BumpProfile {
 public:
  static BumpProfile build(double quad_tol = 1e-10, std::size_t node_count = 2048);

  double operator()(double x) const;

  std::span<const double> nodes() const { return nodes_; }
  std::span<const double> values() const { return values_; }
  double normalizer() const { return normalizer_; }
  double quad_tol() const { return quad_tol_; }
  std::size_t quadrature_evaluations() const { return evaluations_; }

 private:
  std::vector<double> nodes_;
  std::vector<double> values_;
  std::vector<double> slopes_;
  double normalizer_ = 0.0;
  double quad_tol_ = 0.0;
  std::size_t evaluations_ = 0;
};

/// Meyer profiles Phi, m_phi, psi_hat and their tensor products. Immutable
/// after construction; safe for concurrent evaluation.
class MeyerSystem {
 public:
  explicit MeyerSystem(BumpProfile bump, int dim = 1);

  /// Convenience: default bump table.
  static MeyerSystem standard(int dim = 1, double quad_tol = 1e-10);

  const BumpProfile& bump() const { return bump_; }
  int dimension() const { return dim_; }

  /// Phi(xi): 1/sqrt(2pi) on |xi| <= 2pi/3, cosine transition, 0 for |xi| >= 4pi/3.
  double phi_hat(double xi) const;
  /// 2pi-periodic extension of sqrt(2pi) Phi(2 xi) from [-pi, pi).
  double m_phi(double xi) const;
  /// psi_hat(xi) = e^{i xi/2} m_phi(xi/2 + pi) Phi(xi/2).
  cplx psi_hat(double xi) const;
  /// alpha(xi) = m_phi(xi/2 + pi) Phi(xi/2) = e^{-i xi/2} psi_hat(xi); real and even.
  double psi_modulus_profile(double xi) const;

  /// One tensor factor: Phi when `mother` is false, psi_hat otherwise.
  cplx factor(bool mother, double xi) const {
    return mother ? psi_hat(xi) : cplx(phi_hat(xi), 0.0);
  }
  cplx tensor_psi_hat(TensorLabel label, std::span<const double> xi) const;

 private:
  BumpProfile bump_;
  int dim_;
};

/// psi(x) = (1/sqrt(2pi)) int cos((x + 1/2) xi) alpha(xi) dxi by adaptive quadrature.
double eval_psi_space(const MeyerSystem& meyer, double x, double tol);

/// phi(x) = (2/sqrt(2pi)) int_0^{4pi/3} Phi(xi) cos(x xi) dxi.
double eval_phi_space(const MeyerSystem& meyer, double x, double tol);

struct PsiZeroReport {
  double psi0 = 0.0;    // signed psi(0)
  double bound = 0.0;   // (sqrt3/pi) cos(pi/2 g(1/2))
  double margin = 0.0;  // |psi0| - bound
  double g_half = 0.0;
  // psi(0) = J1 + J2 + J3 over [2pi/3, pi], [pi, 4pi/3], [4pi/3, 8pi/3].
  double j1 = 0.0;
  double j2 = 0.0;
  double j3 = 0.0;
  double quad_tol = 0.0;
};

/// Lower bound report for |psi(0)|.
PsiZeroReport psi_zero_lower_bound(const MeyerSystem& meyer, double tol = 1e-10);

}  // namespace tlwavelab
