// SPDX-License-Identifier: Apache-2.0
#include "tlwavelab/meyer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tlwavelab/quadrature.hpp"

namespace tlwavelab {
namespace {

constexpr double kTwoPiOver3 = kTwoPi / 3.0;
constexpr double kFourPiOver3 = 2.0 * kTwoPi / 3.0;
constexpr double kEightPiOver3 = 4.0 * kTwoPi / 3.0;
constexpr double kSqrtTwoPi = 2.50662827463100050242;

double bump_total(double tol) {
  // A coarse pass fixes the scale so the final pass can be asked for a
  // tolerance relative to the normalizer.
  const double rough = integrate_or_throw(eval_f1, 0.0, 1.0, 1e-12);
  return integrate_or_throw(eval_f1, 0.0, 1.0, 0.25 * tol * rough);
}

}  // namespace

std::vector<TensorLabel> mother_labels(int dim) {
  std::vector<TensorLabel> labels;
  for (unsigned bits = 1; bits < (1U << dim); ++bits) labels.push_back({bits});
  return labels;
}

double eval_f(double x) { return x > 0.0 ? std::exp(-1.0 / (x * x)) : 0.0; }

double eval_f1(double x) { return eval_f(x) * eval_f(1.0 - x); }

double eval_g(double x, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("eval_g: tol must be positive");
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double total = bump_total(tol);
  const double partial = integrate_or_throw(eval_f1, 0.0, x, 0.25 * tol * total);
  return std::clamp(partial / total, 0.0, 1.0);
}

BumpProfile BumpProfile::build(double quad_tol, std::size_t node_count) {
  if (!(quad_tol > 0.0)) throw std::invalid_argument("BumpProfile: quad_tol must be positive");
  if (node_count < 4) throw std::invalid_argument("BumpProfile: need at least 4 nodes");

  BumpProfile p;
  p.quad_tol_ = quad_tol;
  p.nodes_.resize(node_count);
  for (std::size_t i = 0; i < node_count; ++i) {
    const double theta = kPi * static_cast<double>(i) / static_cast<double>(node_count - 1);
    p.nodes_[i] = 0.5 * (1.0 - std::cos(theta));
  }
  p.nodes_.front() = 0.0;
  p.nodes_.back() = 1.0;

  const double rough = integrate_or_throw(eval_f1, 0.0, 1.0, 1e-12);
  const double segment_tol = quad_tol * rough / static_cast<double>(node_count);

  std::vector<double> cumulative(node_count, 0.0);
  for (std::size_t i = 1; i < node_count; ++i) {
    const QuadratureResult r =
        integrate(eval_f1, p.nodes_[i - 1], p.nodes_[i], segment_tol);
    if (!r.converged) {
      throw QuadratureError("BumpProfile: segment quadrature failed", r.abs_error);
    }
    p.evaluations_ += r.evaluations;
    cumulative[i] = cumulative[i - 1] + r.value;
  }
  p.normalizer_ = cumulative.back();

  p.values_.resize(node_count);
  p.slopes_.resize(node_count);
  for (std::size_t i = 0; i < node_count; ++i) {
    p.values_[i] = cumulative[i] / p.normalizer_;
    p.slopes_[i] = eval_f1(p.nodes_[i]) / p.normalizer_;
  }
  p.values_.front() = 0.0;
  p.values_.back() = 1.0;

  // Fritsch-Carlson limiter keeps the Hermite interpolant monotone.
  for (std::size_t i = 0; i + 1 < node_count; ++i) {
    const double secant = (p.values_[i + 1] - p.values_[i]) / (p.nodes_[i + 1] - p.nodes_[i]);
    if (secant <= 0.0) {
      p.slopes_[i] = 0.0;
      p.slopes_[i + 1] = 0.0;
      continue;
    }
    const double a = p.slopes_[i] / secant;
    const double b = p.slopes_[i + 1] / secant;
    const double r2 = a * a + b * b;
    if (r2 > 9.0) {
      const double tau = 3.0 / std::sqrt(r2);
      p.slopes_[i] = tau * a * secant;
      p.slopes_[i + 1] = tau * b * secant;
    }
  }
  return p;
}

double BumpProfile::operator()(double x) const {
  if (!(x > 0.0)) return 0.0;
  if (x >= 1.0) return 1.0;
  const auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x);
  const std::size_t i = static_cast<std::size_t>(it - nodes_.begin()) - 1;
  const double h = nodes_[i + 1] - nodes_[i];
  const double t = (x - nodes_[i]) / h;
  const double t2 = t * t;
  const double t3 = t2 * t;
  const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
  const double h10 = t3 - 2.0 * t2 + t;
  const double h01 = -2.0 * t3 + 3.0 * t2;
  const double h11 = t3 - t2;
  const double v = h00 * values_[i] + h10 * h * slopes_[i] + h01 * values_[i + 1] +
                   h11 * h * slopes_[i + 1];
  return std::clamp(v, 0.0, 1.0);
}

MeyerSystem::MeyerSystem(BumpProfile bump, int dim) : bump_(std::move(bump)), dim_(dim) {
  if (dim < 1) throw std::invalid_argument("MeyerSystem: dimension must be positive");
}

MeyerSystem MeyerSystem::standard(int dim, double quad_tol) {
  return MeyerSystem(BumpProfile::build(quad_tol), dim);
}

double MeyerSystem::phi_hat(double xi) const {
  const double a = std::abs(xi);
  if (a <= kTwoPiOver3) return kInvSqrtTwoPi;
  if (a >= kFourPiOver3) return 0.0;
  return kInvSqrtTwoPi * std::cos(0.5 * kPi * bump_(3.0 * a / kTwoPi - 1.0));
}

double MeyerSystem::m_phi(double xi) const {
  const double r = xi - kTwoPi * std::floor((xi + kPi) / kTwoPi);
  return kSqrtTwoPi * phi_hat(2.0 * r);
}

double MeyerSystem::psi_modulus_profile(double xi) const {
  const double a = std::abs(xi);
  if (a <= kTwoPiOver3 || a >= kEightPiOver3) return 0.0;
  return m_phi(0.5 * xi + kPi) * phi_hat(0.5 * xi);
}

cplx MeyerSystem::psi_hat(double xi) const {
  const double alpha = psi_modulus_profile(xi);
  if (alpha == 0.0) return {0.0, 0.0};
  return {alpha * std::cos(0.5 * xi), alpha * std::sin(0.5 * xi)};
}

cplx MeyerSystem::tensor_psi_hat(TensorLabel label, std::span<const double> xi) const {
  if (static_cast<int>(xi.size()) != dim_ || !label.valid_for(dim_)) {
    throw std::invalid_argument("tensor_psi_hat: label/point do not match dimension");
  }
  cplx value(1.0, 0.0);
  for (int axis = 0; axis < dim_; ++axis) {
    value *= factor(label.component(axis), xi[static_cast<std::size_t>(axis)]);
    if (value == cplx(0.0, 0.0)) break;
  }
  return value;
}

double eval_psi_space(const MeyerSystem& meyer, double x, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("eval_psi_space: tol must be positive");
  const double shift = x + 0.5;
  auto integrand = [&](double xi) { return std::cos(shift * xi) * meyer.psi_modulus_profile(xi); };
  const double breaks[] = {kTwoPiOver3, kPi, kFourPiOver3, kTwoPi, kEightPiOver3};
  const double scale = 2.0 * kInvSqrtTwoPi;
  double sum = 0.0;
  for (int i = 0; i < 4; ++i) {
    sum += integrate_or_throw(integrand, breaks[i], breaks[i + 1], 0.25 * tol / scale);
  }
  return scale * sum;
}

double eval_phi_space(const MeyerSystem& meyer, double x, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("eval_phi_space: tol must be positive");
  auto integrand = [&](double xi) { return std::cos(x * xi) * meyer.phi_hat(xi); };
  const double scale = 2.0 * kInvSqrtTwoPi;
  const double sum = integrate_or_throw(integrand, 0.0, kTwoPiOver3, 0.5 * tol / scale) +
                     integrate_or_throw(integrand, kTwoPiOver3, kFourPiOver3, 0.5 * tol / scale);
  return scale * sum;
}

PsiZeroReport psi_zero_lower_bound(const MeyerSystem& meyer, double tol) {
  PsiZeroReport r;
  r.quad_tol = tol;
  r.psi0 = eval_psi_space(meyer, 0.0, tol);
  r.g_half = eval_g(0.5, tol);
  r.bound = std::sqrt(3.0) / kPi * std::cos(0.5 * kPi * r.g_half);
  r.margin = std::abs(r.psi0) - r.bound;

  // m_phi(xi/2 + pi) = sqrt(2pi) Phi(xi - 2pi) on [0, 4pi), so each piece is
  // 2 int cos(xi/2) Phi(xi - 2pi) Phi(xi/2).
  auto piece = [&](double a, double b) {
    auto integrand = [&](double xi) {
      return 2.0 * std::cos(0.5 * xi) * meyer.phi_hat(xi - kTwoPi) * meyer.phi_hat(0.5 * xi);
    };
    return integrate_or_throw(integrand, a, b, tol / 3.0);
  };
  r.j1 = piece(kTwoPiOver3, kPi);
  r.j2 = piece(kPi, kFourPiOver3);
  r.j3 = piece(kFourPiOver3, kEightPiOver3);
  return r;
}

}  // namespace tlwavelab
