// SPDX-License-Identifier: Apache-2.0
#include "tlwavelab/suites.hpp"

#include <cmath>
#include <limits>
#include <memory>

#include "tlwavelab/norms.hpp"
#include "tlwavelab/random.hpp"
#include "tlwavelab/riesz.hpp"
#include "tlwavelab/wavelet_grid.hpp"

namespace tlwavelab {

Report wavelet_suite(const MeyerSystem& meyer, const WaveletSuiteOptions& opts) {
  Report r;
  r.kind = "wavelet";
  r.params["quad_tol"] = opts.quad_tol;
  r.params["bump_nodes"] = meyer.bump().nodes().size();
  r.params["samples"] = opts.samples;

  double partition = 0.0;
  double even = 0.0;
  double plateau = 0.0;
  double outside = 0.0;
  double range_violation = 0.0;
  double psi_support = 0.0;
  const int n = opts.samples;
  for (int i = 0; i < n; ++i) {
    const double xi = kTwoPi * i / (n - 1);
    const double a = meyer.phi_hat(xi);
    const double b = meyer.phi_hat(xi - kTwoPi);
    partition = std::max(partition, std::abs(a * a + b * b - 1.0 / kTwoPi));
    even = std::max(even, std::abs(a - meyer.phi_hat(-xi)));
    range_violation = std::max({range_violation, -a, a - kInvSqrtTwoPi});
    if (xi <= 2 * kPi / 3) plateau = std::max(plateau, std::abs(a - kInvSqrtTwoPi));
    const double far = 4 * kPi / 3 + 3 * xi;  // sweeps [4pi/3, 4pi/3 + 6pi]
    outside = std::max({outside, std::abs(meyer.phi_hat(far)), std::abs(meyer.phi_hat(-far))});
    // psi_hat below 2pi/3 and above 8pi/3
    const double low = (2 * kPi / 3 - 1e-12) * i / (n - 1);
    const double high = 8 * kPi / 3 + 1e-12 + xi;
    psi_support = std::max({psi_support, std::abs(meyer.psi_hat(low)), std::abs(meyer.psi_hat(-low)),
                            std::abs(meyer.psi_hat(high)), std::abs(meyer.psi_hat(-high))});
  }
  r.check("partition identity max err", partition, "<", 1e-9);
  r.check("Phi even max deviation", even, "<=", 0.0);
  r.check("Phi within [0, 1/sqrt(2pi)] max violation", std::max(range_violation, 0.0), "<=", 0.0);
  r.check("Phi plateau on |xi| <= 2pi/3 max deviation", plateau, "<=", 0.0);
  r.check("Phi vanishes for |xi| >= 4pi/3", outside, "<=", 0.0);
  r.check("psi_hat vanishes outside 2pi/3 <= |xi| <= 8pi/3", psi_support, "<=", 0.0);

  double symmetry = 0.0;
  for (int i = 0; i <= 1000; ++i) {
    const double x = i / 1000.0;
    symmetry = std::max(symmetry, std::abs(meyer.bump()(x) + meyer.bump()(1.0 - x) - 1.0));
  }
  r.check("bump symmetry g(x) + g(1-x) = 1 max err", symmetry, "<=", 2 * meyer.bump().quad_tol() + 1e-15);

  const PsiZeroReport z = psi_zero_lower_bound(meyer, opts.quad_tol);
  r.results["psi0"] = z.psi0;
  r.results["psi0_bound"] = z.bound;
  r.results["psi0_margin"] = z.margin;
  r.results["g_half"] = z.g_half;
  r.results["J1"] = z.j1;
  r.results["J2"] = z.j2;
  r.results["J3"] = z.j3;
  r.results["psi0_sign_note"] =
      "psi(0) is negative for this psi_hat; the bound is on |psi(0)|";
  r.check("g(1/2) = 1/2 abs err", std::abs(z.g_half - 0.5), "<=", opts.quad_tol);
  r.check("|psi(0)| lower bound margin", z.margin, ">=", -z.quad_tol);
  return r;
}

Series wavelet_table(const MeyerSystem& meyer, double xi_max, int count) {
  Series s{{"xi", "Phi", "m_phi", "re_psi_hat", "im_psi_hat"}, {}};
  for (int i = 0; i < count; ++i) {
    const double xi = -xi_max + 2 * xi_max * i / (count - 1);
    const cplx p = meyer.psi_hat(xi);
    s.rows.push_back({xi, meyer.phi_hat(xi), meyer.m_phi(xi), p.real(), p.imag()});
  }
  return s;
}

VerifyOptions VerifyOptions::defaults(int dim) {
  VerifyOptions o;
  o.dim = dim;
  if (dim == 2) {
    o.period_exp = 3;
    o.grid_exp = 9;
  }
  return o;
}

Report verify_suite(const MeyerSystem& meyer_in, const VerifyOptions& opts) {
  const auto meyer = std::make_shared<const MeyerSystem>(meyer_in.bump(), opts.dim);
  const GridSpec spec = GridSpec::make(opts.dim, opts.period_exp, opts.grid_exp);
  const WaveletGrid grid(meyer, spec);

  Report r;
  r.kind = "verify";
  r.params["dim"] = spec.dim;
  r.params["period_exp"] = spec.period_exp;
  r.params["grid_exp"] = spec.grid_exp;
  r.params["j_lo"] = spec.j_lo;
  r.params["j_hi"] = spec.j_hi;
  r.params["seed"] = opts.seed;
  r.params["quad_tol"] = opts.quad_tol;

  // Parseval and reconstruction on random band-limited inputs.
  {
    Rng rng(derive_seed(opts.seed, "verify/parseval"));
    double parseval = 0.0;
    double roundtrip = 0.0;
    for (int i = 0; i < opts.parseval_trials; ++i) {
      BandLimitedOptions bl;
      bl.real_valued = i % 2 == 0;
      const GridFunction f = random_band_limited(spec, rng, bl);
      const CoefficientField c = grid.analyze(f);
      const double e = f.l2_norm();
      parseval = std::max(parseval, std::abs(c.energy() - e * e) / (e * e));
      roundtrip = std::max(roundtrip, (grid.synthesize(c) - f).l2_norm() / e);
    }
    r.check("Parseval relative error", parseval, "<=", 1e-9);
    r.check("analyze/synthesize round trip relative error", roundtrip, "<=", 1e-9);
  }

  // Gram matrix entries: diagonal, same-scale neighbours, adjacent scales, random.
  {
    Rng rng(derive_seed(opts.seed, "verify/gram"));
    double gram = 0.0;
    for (int i = 0; i < opts.gram_pairs; ++i) {
      const WaveletIndex a = random_index(spec, rng);
      WaveletIndex b = a;
      switch (i % 4) {
        case 0:
          break;
        case 1:
          b.k[0] += 1 + i % 3;
          break;
        case 2:
          if (a.label.is_mother() && a.j < spec.j_hi) {
            b.j = a.j + 1;
            b.k[0] = 2 * a.k[0] + 1;
            b.k[1] = 2 * a.k[1];
          }
          break;
        default:
          b = random_index(spec, rng);
      }
      const std::int64_t kk = spec.translations(b.j);
      for (int d = 0; d < spec.dim; ++d) b.k[d] = ((b.k[d] % kk) + kk) % kk;
      const double expected = (a == b) ? 1.0 : 0.0;
      gram = std::max(gram, std::abs(grid.spectral_inner_product(a, b) - expected));
    }
    r.check("Gram orthonormality max err", gram, "<=", 1e-8);
  }

  // Riesz near-diagonality: separated scales vanish, adjacent ones do not.
  {
    double separated = 0.0;
    double adjacent = std::numeric_limits<double>::infinity();
    std::size_t pairs = 0;
    const int per = std::max(1, opts.near_diagonal_pairs / 4);
    for (int shift : {2, 3}) {
      for (int j = spec.j_lo; j + shift <= spec.j_hi; j += 2) {
        const auto a = near_diagonal_gram(grid, j, j + shift, per, opts.seed + static_cast<unsigned>(j + 100));
        const auto b = near_diagonal_gram(grid, j + shift, j, per, opts.seed + static_cast<unsigned>(j + 200));
        separated = std::max({separated, a.max_abs, b.max_abs});
        pairs += a.pairs + b.pairs;
      }
    }
    for (int j = spec.j_lo; j < spec.j_hi; j += 3) {
      adjacent = std::min(adjacent, near_diagonal_gram(grid, j, j + 1, 20, opts.seed + 7).max_abs);
    }
    r.results["near_diagonal_pairs"] = pairs;
    r.check("Riesz near-diagonality |j - j~| >= 2 max", separated, "<=", 1e-12);
    r.check("adjacent-scale Riesz pairing min over scales", adjacent, ">", 1e-6);
  }

  // sum_l R_l^2 = -Id on zero-mean inputs; anti-self-adjointness.
  {
    Rng rng(derive_seed(opts.seed, "verify/riesz"));
    double square = 0.0;
    double adjoint = 0.0;
    for (int i = 0; i < opts.square_sum_trials; ++i) {
      const GridFunction f = random_band_limited(spec, rng);
      square = std::max(square, (riesz_square_sum(f) + f).l2_norm() / f.l2_norm());
      if (i < 10) {
        const GridFunction g = random_band_limited(spec, rng);
        for (int ell = 1; ell <= spec.dim; ++ell) {
          const cplx a = inner_product(riesz_apply(ell, f), g);
          const cplx b = inner_product(f, riesz_apply(ell, g));
          adjoint = std::max(adjoint, std::abs(a + b) / (f.l2_norm() * g.l2_norm()));
        }
      }
    }
    r.check("Riesz square sum equals -f relative error", square, "<=", 1e-10);
    r.check("Riesz anti-self-adjointness relative error", adjoint, "<=", 1e-10);
  }

  // Father lattice sum and the L1 bound of the father projection.
  {
    const std::vector<double> xs{0.0, 0.25, 0.5, 0.75};
    const double s64 = father_summability_check(*meyer, xs, 64, opts.quad_tol);
    const double s128 = father_summability_check(*meyer, xs, 128, opts.quad_tol);
    r.results["father_lattice_sum_r64"] = s64;
    r.results["father_lattice_sum_r128"] = s128;
    r.check("father lattice sum change when radius doubles 64 -> 128", s128 - s64, "<", 1e-6);
    if (spec.dim == 2) {
      const double d2 = father_summability_check_2d(*meyer, 0.0, 0.0, 32, opts.quad_tol);
      const double d1 = father_summability_check(*meyer, std::vector<double>{0.0}, 32, opts.quad_tol);
      r.results["father_lattice_sum_2d"] = d2;
      r.check("father lattice sum D=2 equals square of D=1", std::abs(d2 - d1 * d1), "<=", 1e-10 * d2);
    }

    Rng rng(derive_seed(opts.seed, "verify/projection"));
    double ratio = 0.0;
    double idempotence = 0.0;
    for (int i = 0; i < opts.projection_trials; ++i) {
      const GridFunction f = random_band_limited(spec, rng);
      const int j0 = spec.j_lo + i % (spec.j_hi - spec.j_lo + 1);
      const GridFunction p = grid.father_projection(f, j0);
      ratio = std::max(ratio, l1_norm(p) / l1_norm(f));
      if (p.l2_norm() > 0.0) {
        idempotence = std::max(idempotence, (grid.father_projection(p, j0) - p).l2_norm() / p.l2_norm());
      }
    }
    r.results["father_projection_l1_constant"] = ratio;
    r.check("father projection L1 bound constant", ratio, "<", std::numeric_limits<double>::infinity());
    r.check("father projection idempotence relative error", idempotence, "<=", 1e-9);
  }
  return r;
}

}  // namespace tlwavelab
