// SPDX-License-Identifier: Apache-2.0
#include "tlwavelab/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "tlwavelab/fft.hpp"
#include "tlwavelab/norms.hpp"
#include "tlwavelab/random.hpp"
#include "tlwavelab/riesz.hpp"

namespace tlwavelab {
namespace {

// Runs fn(0..n-1) on up to `jobs` threads. Results must be written by index.
template <class Fn>
void parallel_for(int n, int jobs, Fn&& fn) {
  jobs = std::clamp(jobs, 1, std::max(n, 1));
  if (jobs == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (int i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const auto n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  LineFit f;
  f.slope = sxx > 0.0 ? sxy / sxx : 0.0;
  f.intercept = my - f.slope * mx;
  f.r2 = (sxx > 0.0 && syy > 0.0) ? sxy * sxy / (sxx * syy) : 0.0;
  return f;
}

double mean_of(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

// (max - min) / mean
double relative_spread(const std::vector<double>& v) {
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return (*hi - *lo) / mean_of(v);
}

void require_q(double q, const char* who) {
  if (!(q >= 2.0) || !std::isfinite(q)) {
    throw std::invalid_argument(std::string(who) + ": q must lie in [2, inf)");
  }
}

std::shared_ptr<const MeyerSystem> with_dim(const MeyerSystem& meyer, int dim) {
  return std::make_shared<const MeyerSystem>(meyer.bump(), dim);
}

}  // namespace

// ---------------------------------------------------------------------------

Report inclusion_demo(const MeyerSystem& meyer_in, const InclusionOptions& opts) {
  require_q(opts.q, "inclusion demo");
  if (opts.j_floor >= -3) throw std::invalid_argument("inclusion demo: j_floor must be < -3");
  const int dim = opts.dim;
  const auto meyer = with_dim(meyer_in, dim);

  // One grid holds scales j_floor..-1; the samples are never formed, only spectra.
  const int p = 4 - opts.j_floor;
  GridSpec spec;
  try {
    spec = GridSpec::make(dim, p, p + 1, opts.j_floor, -1);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument("inclusion demo: grid cannot represent j_floor=" +
                                std::to_string(opts.j_floor) + " (" + e.what() + ")");
  }
  const WaveletGrid grid(meyer, spec);

  // Fourier coefficients of the periodized father tensor.
  auto father_spectrum = [&](const GridSpec& s) {
    const std::int64_t n = s.samples_per_axis();
    const double len = s.period();
    std::vector<double> axis(static_cast<std::size_t>(n));
    for (std::int64_t pos = 0; pos < n; ++pos) {
      axis[static_cast<std::size_t>(pos)] = meyer->phi_hat(kTwoPi * static_cast<double>(s.signed_frequency(pos)) / len);
    }
    const double amp = std::pow(kTwoPi, 0.5 * dim) / std::pow(len, dim);
    return [=, axis = std::move(axis)](const IndexVec& m) -> cplx {
      double v = amp * axis[static_cast<std::size_t>(s.fft_position(m[0]))];
      if (dim == 2) v *= axis[static_cast<std::size_t>(s.fft_position(m[1]))];
      return v;
    };
  };
  const auto fourier = father_spectrum(spec);

  Report r;
  r.kind = "inclusion";
  r.params["dim"] = dim;
  r.params["q"] = opts.q;
  r.params["j_floor"] = opts.j_floor;
  r.params["period_exp"] = spec.period_exp;
  r.params["grid_exp"] = spec.grid_exp;

  // (a) |c_{j,0}| / 2^{Dj/2} for the all-mother label.
  const TensorLabel all_mother{(1U << dim) - 1U};
  std::vector<double> ratios;
  Series& ra = r.add_series("ratios", {"j", "abs_coefficient", "ratio"});
  for (int j = std::max(-5, opts.j_floor); j >= opts.j_floor; --j) {
    const cplx c = grid.coefficient(fourier, WaveletIndex{all_mother, j, {0, 0}});
    const double ratio = std::abs(c) / std::exp2(0.5 * dim * j);
    ratios.push_back(ratio);
    ra.rows.push_back({static_cast<double>(j), std::abs(c), ratio});
  }
  const double ratio_mean = mean_of(ratios);
  double ratio_dev = 0.0;
  for (const double v : ratios) ratio_dev = std::max(ratio_dev, std::abs(v - ratio_mean) / ratio_mean);
  const double psi0 = eval_psi_space(*meyer, 0.0, opts.quad_tol);
  r.results["ratio_mean"] = ratio_mean;
  r.results["abs_psi0_pow_D"] = std::pow(std::abs(psi0), dim);
  r.check("coefficient ratio max deviation from mean", ratio_dev, "<", 0.05);
  r.check("coefficient ratio limit is positive", ratio_mean, ">", 0.0);

  // (b) truncated f01q over mother scales [c, -2].
  CoefficientField field(spec);
  for (int j = opts.j_floor; j <= -2; ++j) {
    for (const TensorLabel label : mother_labels(dim)) {
      field.put_channel({j, label}, grid.analyze_channel(fourier, ChannelKey{j, label}));
    }
  }
  std::vector<double> shells;
  std::vector<double> norms;
  Series& sh = r.add_series("shells", {"coarsest_scale", "shells", "f01q_truncated", "increment", "l1"});

  // (c) l1 of the sampled father tensor on a grid deep enough for each truncation.
  std::map<int, double> l1_by_p;
  auto l1_for = [&](int c) {
    const int pc = std::max(7, 1 - c);
    if (auto it = l1_by_p.find(pc); it != l1_by_p.end()) return it->second;
    const GridSpec s = GridSpec::make(dim, pc, pc + (dim == 1 ? 3 : 1));
    const auto fs = father_spectrum(s);
    SpectralFunction spec_fn(s);
    const std::int64_t n = s.samples_per_axis();
    for (std::int64_t a = 0; a < n; ++a) {
      if (dim == 1) {
        spec_fn.coeffs[static_cast<std::size_t>(a)] = fs({s.signed_frequency(a), 0});
        continue;
      }
      for (std::int64_t b = 0; b < n; ++b) {
        spec_fn.coeffs[static_cast<std::size_t>(a * n + b)] = fs({s.signed_frequency(a), s.signed_frequency(b)});
      }
    }
    return l1_by_p[pc] = l1_norm(to_grid(spec_fn));
  };

  std::vector<double> l1s;
  for (int c = -3; c >= opts.j_floor; --c) {
    const double v = f01q_norm(field.restrict_scales(c, -2), opts.q);
    const double l1 = l1_for(c);
    const double inc = norms.empty() ? std::numeric_limits<double>::quiet_NaN() : v - norms.back();
    shells.push_back(static_cast<double>(-1 - c));
    norms.push_back(v);
    l1s.push_back(l1);
    sh.rows.push_back({static_cast<double>(c), shells.back(), v, inc, l1});
  }
  const LineFit fit = fit_line(shells, norms);
  r.results["fit_slope"] = fit.slope;
  r.results["fit_intercept"] = fit.intercept;
  r.results["fit_r2"] = fit.r2;
  r.results["l1_mean"] = mean_of(l1s);
  r.check("truncated f01q vs shell count slope", fit.slope, ">", 0.0);
  r.check("truncated f01q vs shell count R^2", fit.r2, ">", 0.9);
  r.check("l1 relative variation across truncations", relative_spread(l1s), "<", 0.01);
  return r;
}

// ---------------------------------------------------------------------------

double lacunary_sign_integral(const DaubechiesScaling& phi0, int shift_exp) {
  const double half = 0.5 * phi0.support_length();
  const double shift = std::ldexp(1.0, shift_exp + 1);
  if (shift <= half) throw std::invalid_argument("lacunary: shifted support meets the origin");
  const double h = phi0.step();
  double s = 0.0;
  for (std::size_t i = 0; i < phi0.values.size(); ++i) {
    s += phi0.values[i] / (static_cast<double>(i) * h - half + shift);
  }
  return -s * h;
}

namespace {

// (1/pi) int Phi(y) / (x - y) dy, Phi = Phi0 centred and shifted by 2^{M+1}.
double hilbert_of_shifted(const DaubechiesScaling& phi0, int shift_exp, double x) {
  const double half = 0.5 * phi0.support_length();
  const double shift = std::ldexp(1.0, shift_exp + 1);
  const double h = phi0.step();
  double s = 0.0;
  for (std::size_t i = 0; i < phi0.values.size(); ++i) {
    s += phi0.values[i] / (x - (static_cast<double>(i) * h - half + shift));
  }
  return s * h / kPi;
}

}  // namespace

Report lacunary_demo(const MeyerSystem& meyer_in, const LacunaryOptions& opts) {
  if (!(opts.q_prime > 1.0 && opts.q_prime <= 2.0)) {
    throw std::invalid_argument("lacunary demo: q' must lie in (1, 2]");
  }
  if (opts.term_counts.empty()) throw std::invalid_argument("lacunary demo: no term counts");
  for (const int m : opts.term_counts) {
    if (m < 1) throw std::invalid_argument("lacunary demo: term counts must be positive");
  }

  const DaubechiesScaling phi0 = daubechies_scaling(opts.order, opts.levels);
  const double half = 0.5 * phi0.support_length();

  Report r;
  r.kind = "lacunary";
  r.params["q_prime"] = opts.q_prime;
  r.params["order"] = opts.order;
  r.params["levels"] = opts.levels;
  r.params["period_exp"] = opts.period_exp;
  r.params["grid_exp"] = opts.grid_exp;
  r.params["samples_per_unit"] = opts.samples_per_unit;

  // Smallest shift M whose centred support fits [-2^M, 2^M] and whose C_D is clearly negative.
  Series& shifts = r.add_series("shift", {"M", "C_D"});
  std::optional<int> shift_exp;
  double c_d = 0.0;
  for (int m = 1; m <= 6; ++m) {
    if (half > std::ldexp(1.0, m)) continue;
    const double v = lacunary_sign_integral(phi0, m);
    shifts.rows.push_back({static_cast<double>(m), v});
    if (!shift_exp && v < -1e-3) {
      shift_exp = m;
      c_d = v;
    }
  }
  if (!shift_exp) {
    throw std::runtime_error("lacunary demo: C_D >= -1e-3 for every admissible shift M <= 6; adjust the shift");
  }
  const int big_m = *shift_exp;
  const double shift = std::ldexp(1.0, big_m + 1);
  r.results["shift_exp"] = big_m;
  r.results["C_D"] = c_d;
  r.check("C_D for the selected shift", c_d, "<", -1e-3);

  // delta: largest 2^{M-1-i} with R1 Phi < C_D / (2 pi) on [-delta, delta].
  const double r1_threshold = c_d / (2.0 * kPi);
  double delta = 0.0;
  for (int i = 0; i < 12 && delta == 0.0; ++i) {
    const double d = std::ldexp(1.0, big_m - 1 - i);
    double worst = -std::numeric_limits<double>::infinity();
    for (int s = -64; s <= 64; ++s) worst = std::max(worst, hilbert_of_shifted(phi0, big_m, d * s / 64.0));
    if (worst < r1_threshold) delta = d;
  }
  if (delta == 0.0) throw std::runtime_error("lacunary demo: no neighbourhood of 0 with R1 Phi < C_D/2");
  r.results["delta"] = delta;
  r.results["R1_threshold"] = r1_threshold;

  const GridSpec spec = GridSpec::make(1, opts.period_exp, opts.grid_exp);
  const auto meyer = with_dim(meyer_in, 1);
  const WaveletGrid grid(meyer, spec);
  const double h = spec.spacing();
  const std::int64_t n = spec.samples_per_axis();
  if (std::ldexp(shift + half, -2) >= spec.period()) {
    throw std::invalid_argument("lacunary demo: period too small for the first term");
  }

  // Term scales j = 2, 4, ... until 2^j h exceeds the Nyquist guard.
  const int wanted = *std::max_element(opts.term_counts.begin(), opts.term_counts.end());
  int available = 0;
  while (available < wanted &&
         std::ldexp(h, 2 * (available + 1)) <= 1.0 / opts.samples_per_unit) {
    ++available;
  }
  std::set<int> counts;
  std::vector<int> dropped;
  for (const int m : opts.term_counts) {
    if (m <= available) {
      counts.insert(m);
    } else {
      dropped.push_back(m);
    }
  }
  r.results["max_terms_under_guard"] = available;
  r.results["dropped_term_counts"] = dropped;
  r.results["k_clause_note"] =
      "the large-|k'| vanishing of coarse coefficients is vacuous here: every translation on this torus lies inside the cutoff";

  SpectralFunction sum(spec);
  SpectralFunction work(spec);
  std::vector<double> acc(static_cast<std::size_t>(n), 0.0);
  double linf = 0.0;

  std::vector<double> ms, linfs, f0s, sups;
  Series& terms = r.add_series("terms", {"m", "finest_scale", "linf", "f0infq", "sup_abs_R1", "R1_at_0",
                                         "ball_radius", "coarse_coefficient_bound"});
  for (int i = 1; i <= available; ++i) {
    const int j = 2 * i;
    std::fill(work.coeffs.begin(), work.coeffs.end(), cplx(0.0, 0.0));
    const auto lo = static_cast<std::int64_t>(std::ceil(std::ldexp(shift - half, -j) / h));
    const auto hi = static_cast<std::int64_t>(std::floor(std::ldexp(shift + half, -j) / h));
    for (std::int64_t k = lo; k <= hi; ++k) {
      const double v = phi0(std::ldexp(static_cast<double>(k) * h, j) - shift + half);
      const auto idx = static_cast<std::size_t>(k);
      work.coeffs[idx] = v;
      acc[idx] += v;
      linf = std::max(linf, std::abs(acc[idx]));
    }
    fft::forward(work.coeffs, 1, n);
    const double inv = 1.0 / static_cast<double>(n);
    for (std::size_t k = 0; k < sum.coeffs.size(); ++k) sum.coeffs[k] += inv * work.coeffs[k];
    if (!counts.contains(i)) continue;

    work.coeffs = sum.coeffs;
    riesz_apply_spectrum(1, work);
    fft::backward(work.coeffs, 1, n);
    const double radius = delta * std::ldexp(1.0, -j);
    const auto reach = static_cast<std::int64_t>(std::floor(radius / h));
    double sup = 0.0;
    for (std::int64_t k = -reach; k <= reach; ++k) {
      sup = std::max(sup, std::abs(work.coeffs[static_cast<std::size_t>(spec.fft_position(k))]));
    }
    const double at0 = work.coeffs[0].real();

    double coarse = 0.0;
    double f0 = 0.0;
    {
      const CoefficientField c = grid.analyze(sum);
      f0 = f0infq_functional(c, opts.q_prime);
      for (const auto& [key, block] : c.channels()) {
        if (key.j >= 0) continue;
        double mx = 0.0;
        for (const cplx v : block) mx = std::max(mx, std::abs(v));
        coarse = std::max(coarse, mx / std::exp2(0.5 * key.j));
      }
    }
    ms.push_back(i);
    linfs.push_back(linf);
    f0s.push_back(f0);
    sups.push_back(sup);
    terms.rows.push_back({static_cast<double>(i), static_cast<double>(j), linf, f0, sup, at0, radius, coarse});
  }
  if (ms.empty()) throw std::invalid_argument("lacunary demo: every requested term count exceeds the Nyquist guard");

  r.check("linf(f_m) relative variation across m", relative_spread(linfs), "<", 0.01);
  r.check("f0infq'(f_m) relative variation across m", relative_spread(f0s), "<", 0.10);
  double min_step = std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k < ms.size(); ++k) {
    if (ms[k - 1] >= 3) min_step = std::min(min_step, sups[k] - sups[k - 1]);
  }
  if (std::isinf(min_step)) {
    r.results["monotonicity_note"] = "fewer than two term counts >= 3; monotonicity not tested";
  } else {
    r.check("sup|R1 f_m| smallest increment for m >= 3", min_step, ">", 0.0);
  }
  if (ms.size() >= 2) {
    const LineFit fit = fit_line(ms, sups);
    r.results["R1_growth_slope"] = fit.slope;
    r.results["R1_growth_r2"] = fit.r2;
    r.check("sup|R1 f_m| growth slope in m", fit.slope, ">", 0.0);
  }
  return r;
}

// ---------------------------------------------------------------------------

Report riesz_char_check(const MeyerSystem& meyer_in, const RieszCharOptions& opts) {
  require_q(opts.q, "riesz-char");
  if (opts.trials < 1) throw std::invalid_argument("riesz-char: trials must be positive");
  const GridSpec spec = GridSpec::make(opts.dim, opts.period_exp, opts.grid_exp);
  const WaveletGrid grid(with_dim(meyer_in, opts.dim), spec);
  const double q = opts.q;

  struct Ratios {
    double we = 0.0;
    double h1 = 0.0;
  };
  auto ratios = [&](const GridFunction& f) {
    const CoefficientField c = grid.analyze(f);
    const double den = f01q_norm(c, q);
    Ratios out;
    out.h1 = l1_norm(f);
    for (int ell = 0; ell <= spec.dim; ++ell) {
      if (ell == 0) {
        out.we += we1q_norm(grid, c, f, q).value;
        continue;
      }
      const GridFunction g = riesz_apply(ell, f);
      out.we += we1q_norm(grid, grid.analyze(g), g, q).value;
      out.h1 += l1_norm(g);
    }
    out.we /= den;
    out.h1 /= den;
    return out;
  };

  Rng rng(derive_seed(opts.seed, "riesz-char"));
  std::vector<GridFunction> inputs;
  for (int t = 0; t < opts.trials; ++t) inputs.push_back(random_band_limited(spec, rng));
  std::vector<Ratios> out(inputs.size());
  parallel_for(opts.trials, opts.jobs, [&](int t) { out[static_cast<std::size_t>(t)] = ratios(inputs[static_cast<std::size_t>(t)]); });

  Report r;
  r.kind = "riesz-char";
  r.params["dim"] = spec.dim;
  r.params["period_exp"] = spec.period_exp;
  r.params["grid_exp"] = spec.grid_exp;
  r.params["q"] = q;
  r.params["trials"] = opts.trials;
  r.params["seed"] = opts.seed;

  RatioStats we, h1;
  Series& s = r.add_series("ratios", {"trial", "we_ratio", "h1_ratio"});
  for (std::size_t t = 0; t < out.size(); ++t) {
    we.add(out[t].we);
    h1.add(out[t].h1);
    s.rows.push_back({static_cast<double>(t), out[t].we, out[t].h1});
  }
  r.results["min"] = we.min();
  r.results["max"] = we.max();
  r.results["mean"] = we.mean();
  r.results["spread"] = we.spread();
  r.results["h1_ratio_min"] = h1.min();
  r.results["h1_ratio_max"] = h1.max();
  r.results["h1_ratio_spread"] = h1.spread();
  r.check("ratio min", we.min(), ">", 0.0);
  r.check("ratio max", we.max(), "<", std::numeric_limits<double>::infinity());
  if (opts.budget) {
    r.params["budget"] = *opts.budget;
    r.check("ratio max/min within golden budget", we.spread(), "<=", *opts.budget);
  }

  const double alpha = 3.7;
  const double base = out.front().we;
  const double scaled = ratios(cplx(alpha) * inputs.front()).we;
  r.check("ratio invariance under f -> 3.7 f", std::abs(scaled - base) / base, "<=", 1e-10);

  const WaveletIndex single{TensorLabel{1U}, 1, {3, 0}};
  const double single_ratio = ratios(grid.sample_wavelet(single)).we;
  r.results["single_wavelet_ratio"] = single_ratio;
  r.check_flag("single wavelet ratio finite and positive", std::isfinite(single_ratio) && single_ratio > 0.0,
               single_ratio);
  return r;
}

// ---------------------------------------------------------------------------

Report duality_pairing_check(const MeyerSystem& meyer_in, const DualityOptions& opts) {
  require_q(opts.q, "duality");
  if (opts.trials < 1) throw std::invalid_argument("duality: trials must be positive");
  const GridSpec spec = GridSpec::make(opts.dim, opts.period_exp, opts.grid_exp);
  const WaveletGrid grid(with_dim(meyer_in, opts.dim), spec);
  const double q = opts.q;
  const double qp = q / (q - 1.0);

  struct Pair {
    double pairing = 0.0;
    double we_bound = 0.0;  // we1q(f) (linf(g) + f0infq'(g))
    double h1_bmo = 0.0;    // f01q(f, 2) f0infq(g, 2)
  };
  auto evaluate = [&](const GridFunction& f, const GridFunction& g) {
    const CoefficientField cf = grid.analyze(f);
    const CoefficientField cg = grid.analyze(g);
    Pair p;
    p.pairing = std::abs(inner_product(f, g));
    p.we_bound = we1q_norm(grid, cf, f, q).value * (linf_norm(g) + f0infq_functional(cg, qp));
    p.h1_bmo = f01q_norm(cf, 2.0) * f0infq_functional(cg, 2.0);
    return p;
  };

  const int total = 2 * opts.trials;
  Rng rng(derive_seed(opts.seed, "duality"));
  std::vector<std::pair<GridFunction, GridFunction>> inputs;
  for (int t = 0; t < total; ++t) {
    GridFunction f = random_band_limited(spec, rng);
    GridFunction g = random_band_limited(spec, rng);
    inputs.emplace_back(std::move(f), std::move(g));
  }
  std::vector<Pair> out(inputs.size());
  parallel_for(total, opts.jobs, [&](int t) {
    const auto& [f, g] = inputs[static_cast<std::size_t>(t)];
    out[static_cast<std::size_t>(t)] = evaluate(f, g);
  });

  Report r;
  r.kind = "duality";
  r.params["dim"] = spec.dim;
  r.params["period_exp"] = spec.period_exp;
  r.params["grid_exp"] = spec.grid_exp;
  r.params["q"] = q;
  r.params["q_prime"] = qp;
  r.params["trials"] = opts.trials;
  r.params["seed"] = opts.seed;

  Series& s = r.add_series("pairs", {"trial", "pairing", "we_bound", "h1_bmo_bound", "C", "C_h1_bmo"});
  double c_half = 0.0, c_full = 0.0, b_half = 0.0, b_full = 0.0;
  for (std::size_t t = 0; t < out.size(); ++t) {
    const double c = out[t].pairing / out[t].we_bound;
    const double b = out[t].pairing / out[t].h1_bmo;
    s.rows.push_back({static_cast<double>(t), out[t].pairing, out[t].we_bound, out[t].h1_bmo, c, b});
    c_full = std::max(c_full, c);
    b_full = std::max(b_full, b);
    if (static_cast<int>(t) < opts.trials) {
      c_half = std::max(c_half, c);
      b_half = std::max(b_half, b);
    }
  }
  r.results["C_emp"] = c_half;
  r.results["C_emp_doubled"] = c_full;
  r.check("C_emp finite", c_half, "<", std::numeric_limits<double>::infinity());
  r.check("C_emp stability under doubling trials", c_full / c_half, "<=", 2.0);
  if (q == 2.0) {
    r.results["C_h1_bmo"] = b_half;
    r.results["C_h1_bmo_doubled"] = b_full;
    r.check("H1 x BMO pairing constant finite", b_half, "<", std::numeric_limits<double>::infinity());
    r.check("H1 x BMO pairing constant stability under doubling", b_full / b_half, "<=", 2.0);
  }

  // Single wavelet against itself, and against a wavelet with disjoint coefficients.
  const WaveletIndex a{TensorLabel{1U}, 1, {2, 0}};
  const WaveletIndex b{TensorLabel{1U}, 3, {5, 0}};
  const GridFunction fa = grid.sample_wavelet(a);
  const GridFunction fb = grid.sample_wavelet(b);
  const Pair self = evaluate(fa, fa);
  r.results["single_wavelet_pairing"] = self.pairing;
  r.results["single_wavelet_bound"] = self.we_bound;
  r.check("single wavelet <psi, psi> = 1 abs err", std::abs(self.pairing - 1.0), "<=", 1e-8);
  r.check("disjoint coefficient pair |<f, g>|", std::abs(inner_product(fa, fb)), "<=", 1e-10);
  return r;
}

// ---------------------------------------------------------------------------

FsDecomposition trivial_fs_decomposition(const WaveletGrid& grid, const GridFunction& f, double q_prime) {
  if (!(f.spec == grid.spec())) throw std::invalid_argument("fs-trivial: grid spec mismatch");
  const SpectralFunction s = to_spectrum(f);
  double peak = 0.0;
  for (const cplx v : s.coeffs) peak = std::max(peak, std::abs(v));
  if (std::abs(s.coeffs[0]) > 1e-12 * peak) throw std::invalid_argument("fs-trivial: input has nonzero mean");

  const int dim = grid.spec().dim;
  FsDecomposition out;
  out.f0 = GridFunction(grid.spec());
  GridFunction recon = out.f0;
  Report& r = out.report;
  r.kind = "fs-trivial";
  r.params["dim"] = dim;
  r.params["period_exp"] = grid.spec().period_exp;
  r.params["grid_exp"] = grid.spec().grid_exp;
  r.params["q_prime"] = q_prime;
  r.results["label"] = "trivial decomposition; boundedness of components NOT guaranteed";
  Series& comp = r.add_series("components", {"ell", "linf", "f0infq"});
  for (int ell = 1; ell <= dim; ++ell) {
    GridFunction fl = cplx(-1.0) * riesz_apply(ell, f);
    recon += riesz_apply(ell, fl);
    const double linf = linf_norm(fl);
    const double f0 = f0infq_functional(grid.analyze(fl), q_prime);
    comp.rows.push_back({static_cast<double>(ell), linf, f0});
    out.components.push_back(std::move(fl));
  }
  r.results["input_linf"] = linf_norm(f);
  r.check("reconstruction f = f0 + sum R_l f_l relative error", (recon - f).l2_norm() / f.l2_norm(), "<=",
          1e-10);
  return out;
}

}  // namespace tlwavelab
