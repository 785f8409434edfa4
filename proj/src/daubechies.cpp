// SPDX-License-Identifier: Apache-2.0
#include "tlwavelab/daubechies.hpp"

#include <algorithm>
#include <cstdint>

#include <Eigen/Dense>
#include <unsupported/Eigen/Polynomials>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace tlwavelab {
namespace {

using cld = std::complex<long double>;

// Binomial polynomial P(y) = sum_{k<p} C(p-1+k, k) y^k, lowest degree first.
std::vector<long double> binomial_poly(int p) {
  std::vector<long double> c(static_cast<std::size_t>(p));
  long double b = 1.0L;
  for (int k = 0; k < p; ++k) {
    c[static_cast<std::size_t>(k)] = b;
    b = b * static_cast<long double>(p + k) / static_cast<long double>(k + 1);
  }
  return c;
}

cld horner(const std::vector<long double>& c, cld y, cld* derivative) {
  cld v = 0.0L;
  cld d = 0.0L;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    d = d * y + v;
    v = v * y + *it;
  }
  *derivative = d;
  return v;
}

}  // namespace

DaubechiesFilter DaubechiesFilter::make(int order) {
  if (order < 1 || order > 40) throw std::invalid_argument("Daubechies order must lie in [1, 40]");
  DaubechiesFilter out;
  out.order = order;
  const auto poly = binomial_poly(order);

  // Start from the zeros of (z + 1)^p.
  std::vector<cld> m{1.0L};
  auto multiply = [&](cld a, cld b) {  // m(z) *= (a z + b)
    std::vector<cld> r(m.size() + 1, 0.0L);
    for (std::size_t i = 0; i < m.size(); ++i) {
      r[i] += b * m[i];
      r[i + 1] += a * m[i];
    }
    m = std::move(r);
  };
  for (int i = 0; i < order; ++i) multiply(0.5L, 0.5L);

  if (order > 1) {
    Eigen::VectorXd coeffs(order);
    for (int k = 0; k < order; ++k) coeffs[k] = static_cast<double>(poly[static_cast<std::size_t>(k)]);
    Eigen::PolynomialSolver<double, Eigen::Dynamic> solver(coeffs);
    for (const auto& root : solver.roots()) {
      cld y(root.real(), root.imag());
      for (int it = 0; it < 8; ++it) {  // Newton polish in extended precision
        cld d;
        const cld v = horner(poly, y, &d);
        if (std::abs(d) == 0.0L) break;
        y -= v / d;
      }
      // y = (2 - z - 1/z)/4 gives z^2 - (2 - 4y) z + 1 = 0; keep |z| < 1.
      const cld b = 2.0L - 4.0L * y;
      const cld disc = std::sqrt(b * b - 4.0L);
      cld r = 0.5L * (b + disc);
      if (std::abs(r) > 1.0L) r = 0.5L * (b - disc);
      multiply(1.0L / (1.0L - r), -r / (1.0L - r));
    }
  }
  const long double sqrt2 = std::sqrt(2.0L);
  out.h.reserve(m.size());
  // Reverse into the usual extremal-phase orientation, h_0 = (1 + sqrt3) / (4 sqrt2) for p = 2.
  for (auto it = m.rbegin(); it != m.rend(); ++it) out.h.push_back(static_cast<double>(sqrt2 * it->real()));
  return out;
}

double DaubechiesFilter::orthogonality_error() const {
  double err = 0.0;
  const auto n = static_cast<std::ptrdiff_t>(h.size());
  for (std::ptrdiff_t m = 0; 2 * m < n; ++m) {
    long double s = 0.0L;
    for (std::ptrdiff_t k = 0; k + 2 * m < n; ++k) {
      s += static_cast<long double>(h[static_cast<std::size_t>(k)]) *
           h[static_cast<std::size_t>(k + 2 * m)];
    }
    err = std::max(err, static_cast<double>(std::abs(s - (m == 0 ? 1.0L : 0.0L))));
  }
  return err;
}

double DaubechiesScaling::step() const { return std::ldexp(1.0, -levels); }

double DaubechiesScaling::operator()(double x) const {
  const double len = support_length();
  if (!(x > 0.0) || !(x < len)) return 0.0;
  const double u = x / step();
  const auto last = static_cast<std::ptrdiff_t>(values.size()) - 1;
  auto i0 = static_cast<std::ptrdiff_t>(std::floor(u)) - 1;
  i0 = std::clamp<std::ptrdiff_t>(i0, 0, last - 3);
  const double t = u - static_cast<double>(i0);
  const double* v = values.data() + i0;
  // Lagrange basis on nodes 0, 1, 2, 3.
  return v[0] * (-(t - 1) * (t - 2) * (t - 3) / 6.0) + v[1] * (t * (t - 2) * (t - 3) / 2.0) +
         v[2] * (-t * (t - 1) * (t - 3) / 2.0) + v[3] * (t * (t - 1) * (t - 2) / 6.0);
}

DaubechiesScaling daubechies_cascade(int order, int levels) {
  DaubechiesScaling out;
  out.filter = DaubechiesFilter::make(order);
  out.levels = levels;
  const auto& h = out.filter.h;
  const int taps = static_cast<int>(h.size());
  const int last = taps - 1;  // support [0, last]
  const double sqrt2 = std::sqrt(2.0);

  // phi(i) = sqrt2 sum_k h_{2i-k} phi(k) on the interior integers 1..last-1.
  const int n = last - 1;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k <= n; ++k) {
      const int idx = 2 * i - k;
      if (idx >= 0 && idx < taps) a(i - 1, k - 1) = sqrt2 * h[static_cast<std::size_t>(idx)];
    }
  }
  // Null vector of (A - I) with the normalization sum phi(k) = 1 appended.
  Eigen::MatrixXd sys(n + 1, n);
  sys.topRows(n) = a - Eigen::MatrixXd::Identity(n, n);
  sys.row(n).setOnes();
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n + 1);
  rhs[n] = 1.0;
  const Eigen::VectorXd integer_values = sys.colPivHouseholderQr().solve(rhs);

  std::vector<double> cur(static_cast<std::size_t>(last) + 1, 0.0);
  for (int i = 1; i <= n; ++i) cur[static_cast<std::size_t>(i)] = integer_values[i - 1];

  for (int level = 1; level <= levels; ++level) {
    // phi(i / 2^l) = sqrt2 sum_k h_k phi((i - k 2^{l-1}) / 2^{l-1}).
    const std::int64_t half = std::int64_t{1} << (level - 1);
    const auto prev_count = static_cast<std::int64_t>(cur.size());
    const std::int64_t count = static_cast<std::int64_t>(last) * 2 * half + 1;
    std::vector<double> next(static_cast<std::size_t>(count), 0.0);
    double residual = 0.0;
    for (std::int64_t i = 0; i < count; ++i) {
      if (i % 2 == 0) {
        next[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i / 2)];
        continue;
      }
      double s = 0.0;
      for (int k = 0; k < taps; ++k) {
        const std::int64_t src = i - k * half;
        if (src >= 0 && src < prev_count) s += h[static_cast<std::size_t>(k)] * cur[static_cast<std::size_t>(src)];
      }
      s *= sqrt2;
      next[static_cast<std::size_t>(i)] = s;
      const double mid = 0.5 * (cur[static_cast<std::size_t>(i / 2)] + cur[static_cast<std::size_t>(i / 2 + 1)]);
      residual = std::max(residual, std::abs(s - mid));
    }
    cur = std::move(next);
    out.refinement.push_back(residual);
  }
  out.values = std::move(cur);
  return out;
}

DaubechiesScaling daubechies_scaling(int order, int levels) {
  if (order < 10) {
    throw std::invalid_argument("daubechies_scaling: order " + std::to_string(order) +
                                " below 10 is too rough for the lacunary construction");
  }
  if (levels < 8) throw std::invalid_argument("daubechies_scaling: need at least 8 levels");
  DaubechiesScaling out = daubechies_cascade(order, levels);
  for (std::size_t l = 1; l < out.refinement.size(); ++l) {
    if (!(out.refinement[l] < out.refinement[l - 1])) {
      throw std::runtime_error("daubechies_scaling: cascade diverges at level " +
                               std::to_string(l + 1));
    }
  }
  return out;
}

}  // namespace tlwavelab
