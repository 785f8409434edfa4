// SPDX-License-Identifier: Apache-2.0
//
// tlwavelab: command-line driver. Exit codes: 0 ok, 1 check failure, 2 usage, 3 I/O.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tlwavelab/experiments.hpp"
#include "tlwavelab/io.hpp"
#include "tlwavelab/norms.hpp"
#include "tlwavelab/random.hpp"
#include "tlwavelab/report.hpp"
#include "tlwavelab/riesz.hpp"
#include "tlwavelab/suites.hpp"
#include "tlwavelab/wavelet_grid.hpp"

namespace tl = tlwavelab;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kIo = 3 };

struct RunConfig {
  int dim = 1;
  std::optional<int> period_exp;
  std::optional<int> grid_exp;
  double q = 2.0;
  std::uint64_t seed = 0;
  std::string out = ".";
  int jobs = 1;
  double quad_tol = 1e-10;

  std::filesystem::path out_dir() const {
    if (const char* env = std::getenv("TLWAVELAB_OUT"); env != nullptr && *env != '\0') return env;
    return out;
  }

  // Explicit --period-exp/--grid-exp win; otherwise the per-dimension desk defaults.
  tl::GridSpec spec() const {
    const auto d = tl::VerifyOptions::defaults(dim);
    return tl::GridSpec::make(dim, period_exp.value_or(d.period_exp), grid_exp.value_or(d.grid_exp));
  }

  std::shared_ptr<const tl::MeyerSystem> meyer(int d) const {
    return std::make_shared<const tl::MeyerSystem>(tl::MeyerSystem::standard(d, quad_tol));
  }
};

int finish(const tl::Report& r, const RunConfig& cfg) {
  for (const auto& c : r.checks) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.value;
    if (c.relation != "flag") std::cout << ' ' << c.relation << ' ' << c.threshold;
    std::cout << '\n';
  }
  const auto path = r.write(cfg.out_dir());
  std::cout << "wrote " << path.string() << '\n';
  return r.passed() ? kOk : kCheckFailed;
}

tl::GridFunction input_or_random(const std::string& input, const RunConfig& cfg, const char* job) {
  if (!input.empty()) return tl::read_grid_file(input);
  tl::Rng rng(tl::derive_seed(cfg.seed, job));
  return tl::random_band_limited(cfg.spec(), rng);
}

void add_grid_params(tl::Report& r, const tl::GridSpec& s) {
  r.params["dim"] = s.dim;
  r.params["period_exp"] = s.period_exp;
  r.params["grid_exp"] = s.grid_exp;
  r.params["j_lo"] = s.j_lo;
  r.params["j_hi"] = s.j_hi;
}

int cmd_norm(const RunConfig& cfg, const std::string& which, const std::string& input) {
  const tl::GridFunction f = tl::read_grid_file(input);
  const tl::WaveletGrid grid(cfg.meyer(f.spec.dim), f.spec);
  tl::NormReport n;
  n.name = which;
  if (which == "l1") {
    n.value = tl::l1_norm(f);
  } else if (which == "linf") {
    n.value = tl::linf_norm(f);
  } else {
    n.q = cfg.q;
    const tl::CoefficientField c = grid.analyze(f);
    if (which == "f01q") {
      n.value = tl::f01q_norm(c, cfg.q);
    } else if (which == "f0infq") {
      n.value = tl::f0infq_functional(c, cfg.q);
    } else if (which == "we1q" || which == "weinfq") {
      const tl::WeResult w = which == "we1q" ? tl::we1q_norm(grid, c, f, cfg.q) : tl::weinfq_norm(grid, c, f, cfg.q);
      n.value = w.value;
      n.window = w.witness;
    } else {
      const tl::SumSpaceBound b = tl::sum_space_upper(grid, c, f, cfg.q);
      n.value = b.value;
      n.notes = "upper bound; split=" + b.split + (b.cut ? ", cut at " + std::to_string(*b.cut) : "");
    }
  }
  tl::Report r;
  r.kind = "norm";
  add_grid_params(r, f.spec);
  r.params["input"] = std::filesystem::path(input).filename().string();
  r.results = tl::to_json(n);
  std::cout << which << " = " << n.value << '\n';
  return finish(r, cfg);
}

int cmd_riesz(const RunConfig& cfg, int ell, const std::string& input, const std::string& output, bool square) {
  const tl::GridFunction f = input_or_random(input, cfg, "riesz");
  if (ell < 0 || ell > f.spec.dim) throw std::invalid_argument("--ell must lie in 0..D");
  const tl::GridFunction g = tl::riesz_apply(ell, f);
  tl::Report r;
  r.kind = "riesz";
  add_grid_params(r, f.spec);
  r.params["ell"] = ell;
  r.params["seed"] = cfg.seed;
  r.results["input_l2"] = f.l2_norm();
  r.results["output_l2"] = g.l2_norm();
  r.results["output_max_imag"] = g.max_imag();
  if (square) {
    const tl::GridFunction s = tl::riesz_square_sum(f);
    r.check("Riesz square sum equals -f relative error", (s + f).l2_norm() / f.l2_norm(), "<=", 1e-10);
  }
  if (!output.empty()) tl::write_grid_file(output, g);
  return finish(r, cfg);
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"tlwavelab: Meyer wavelets, Riesz transforms and Triebel-Lizorkin norms on periodic grids"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--dim", cfg.dim, "dimension D")->check(CLI::Range(1, 2));
  app.add_option("--period-exp", cfg.period_exp, "period exponent P, L = 2^P");
  app.add_option("--grid-exp", cfg.grid_exp, "grid exponent G, 2^G samples per axis");
  app.add_option("--q", cfg.q, "exponent q");
  app.add_option("--seed", cfg.seed, "master seed");
  app.add_option("--out", cfg.out, "output directory (TLWAVELAB_OUT overrides)");
  app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--quad-tol", cfg.quad_tol, "quadrature tolerance")->check(CLI::PositiveNumber);

  std::function<int()> action;

  auto* wavelet = app.add_subcommand("wavelet", "build the Meyer profiles and run the property suite");
  auto* wbuild = wavelet->add_subcommand("build", "property suite and summary (default)");
  auto* wtable = wavelet->add_subcommand("table", "tabulate Phi, m_phi, psi_hat");
  double xi_max = 3 * tl::kPi;
  int table_count = 1201;
  wtable->add_option("--xi-max", xi_max)->check(CLI::PositiveNumber);
  wtable->add_option("--count", table_count)->check(CLI::Range(2, 1000000));
  auto wavelet_build = [&] {
    tl::WaveletSuiteOptions o;
    o.quad_tol = cfg.quad_tol;
    const auto meyer = cfg.meyer(1);
    tl::Report r = tl::wavelet_suite(*meyer, o);
    r.series.emplace_back("table", tl::wavelet_table(*meyer));
    return finish(r, cfg);
  };
  wavelet->callback([&] { if (!action) action = wavelet_build; });
  wbuild->callback([&] { action = wavelet_build; });
  wtable->callback([&] {
    action = [&] {
      tl::Report r;
      r.kind = "wavelet-table";
      r.params["quad_tol"] = cfg.quad_tol;
      r.params["xi_max"] = xi_max;
      r.series.emplace_back("table", tl::wavelet_table(*cfg.meyer(1), xi_max, table_count));
      return finish(r, cfg);
    };
  });

  std::string input, output;
  double threshold = 0.0;
  auto* analyze = app.add_subcommand("analyze", "grid file -> coefficient CSV");
  analyze->add_option("--input", input)->required();
  analyze->add_option("--output", output)->required();
  analyze->add_option("--threshold", threshold, "drop coefficients with |c| <= threshold");
  analyze->callback([&] {
    action = [&] {
      const tl::GridFunction f = tl::read_grid_file(input);
      const tl::WaveletGrid grid(cfg.meyer(f.spec.dim), f.spec);
      const tl::CoefficientField c = grid.analyze(f);
      tl::write_coefficients_csv_file(output, c, threshold);
      std::cout << "coefficients: " << c.nonzero_count(threshold) << ", energy " << c.energy() << '\n';
      return static_cast<int>(kOk);
    };
  });

  auto* synthesize = app.add_subcommand("synthesize", "coefficient CSV -> grid file (grid from --dim/--period-exp/--grid-exp)");
  synthesize->add_option("--input", input)->required();
  synthesize->add_option("--output", output)->required();
  synthesize->callback([&] {
    action = [&] {
      const tl::GridSpec spec = cfg.spec();
      const tl::WaveletGrid grid(cfg.meyer(spec.dim), spec);
      tl::write_grid_file(output, grid.synthesize(tl::read_coefficients_csv_file(input, spec)));
      return static_cast<int>(kOk);
    };
  });

  std::string which;
  auto* norm = app.add_subcommand("norm", "evaluate a norm of a grid file");
  norm->add_option("--which", which)
      ->required()
      ->check(CLI::IsMember({"l1", "linf", "f01q", "f0infq", "we1q", "weinfq", "sum1q"}));
  norm->add_option("--input", input)->required();
  norm->callback([&] { action = [&] { return cmd_norm(cfg, which, input); }; });

  int ell = 1;
  bool square = false;
  auto* riesz = app.add_subcommand("riesz", "apply R_ell (seeded random input if --input is absent)");
  riesz->add_option("--ell", ell);
  riesz->add_option("--input", input);
  riesz->add_option("--output", output);
  riesz->add_flag("--check-square-sum", square);
  riesz->callback([&] { action = [&] { return cmd_riesz(cfg, ell, input, output, square); }; });

  auto* verify = app.add_subcommand("verify", "orthonormality, Parseval, Riesz identities");
  verify->callback([&] {
    action = [&] {
      tl::VerifyOptions o = tl::VerifyOptions::defaults(cfg.dim);
      o.period_exp = cfg.period_exp.value_or(o.period_exp);
      o.grid_exp = cfg.grid_exp.value_or(o.grid_exp);
      o.seed = cfg.seed;
      o.quad_tol = cfg.quad_tol;
      return finish(tl::verify_suite(*cfg.meyer(cfg.dim), o), cfg);
    };
  });

  auto* demo = app.add_subcommand("demo", "scripted experiments");
  demo->require_subcommand(1);

  int j_floor = -9;
  auto* inclusion = demo->add_subcommand("inclusion", "father tensor: bounded L1, divergent F01q");
  inclusion->add_option("--j-floor", j_floor);
  inclusion->callback([&] {
    action = [&] {
      tl::InclusionOptions o;
      o.dim = cfg.dim;
      o.q = cfg.q;
      o.j_floor = j_floor;
      o.quad_tol = cfg.quad_tol;
      return finish(tl::inclusion_demo(*cfg.meyer(cfg.dim), o), cfg);
    };
  });

  tl::LacunaryOptions lac;
  auto* lacunary = demo->add_subcommand("lacunary", "lacunary Daubechies sum: bounded f, unbounded R1 f");
  lacunary->add_option("--q-prime", lac.q_prime);
  lacunary->add_option("--terms", lac.term_counts, "term counts m")->delimiter(',');
  lacunary->add_option("--order", lac.order);
  lacunary->add_option("--levels", lac.levels);
  lacunary->callback([&] {
    action = [&] {
      if (cfg.dim != 1) throw std::invalid_argument("demo lacunary runs in D=1");
      if (cfg.period_exp) lac.period_exp = *cfg.period_exp;
      if (cfg.grid_exp) lac.grid_exp = *cfg.grid_exp;
      return finish(tl::lacunary_demo(*cfg.meyer(1), lac), cfg);
    };
  });

  int trials = 50;
  std::optional<double> budget;
  auto* rchar = demo->add_subcommand("riesz-char", "sum_l we1q(R_l f) / f01q(f) over random f");
  rchar->add_option("--trials", trials)->check(CLI::PositiveNumber);
  rchar->add_option("--budget", budget, "golden max/min budget");
  rchar->callback([&] {
    action = [&] {
      const tl::GridSpec s = cfg.spec();
      tl::RieszCharOptions o;
      o.dim = s.dim;
      o.period_exp = s.period_exp;
      o.grid_exp = s.grid_exp;
      o.q = cfg.q;
      o.trials = trials;
      o.seed = cfg.seed;
      o.jobs = cfg.jobs;
      o.budget = budget;
      return finish(tl::riesz_char_check(*cfg.meyer(s.dim), o), cfg);
    };
  });

  auto* duality = demo->add_subcommand("duality", "pairing bound against linf + f0infq'");
  duality->add_option("--trials", trials)->check(CLI::PositiveNumber);
  duality->callback([&] {
    action = [&] {
      const tl::GridSpec s = cfg.spec();
      tl::DualityOptions o;
      o.dim = s.dim;
      o.period_exp = s.period_exp;
      o.grid_exp = s.grid_exp;
      o.q = cfg.q;
      o.trials = trials;
      o.seed = cfg.seed;
      o.jobs = cfg.jobs;
      return finish(tl::duality_pairing_check(*cfg.meyer(s.dim), o), cfg);
    };
  });

  auto* fs = demo->add_subcommand("fs-trivial", "f = sum_l R_l(-R_l f) with component norms");
  fs->add_option("--input", input, "zero-mean grid file (seeded random input if absent)");
  fs->callback([&] {
    action = [&] {
      const tl::GridFunction f = input_or_random(input, cfg, "fs-trivial");
      const tl::WaveletGrid grid(cfg.meyer(f.spec.dim), f.spec);
      const double qp = cfg.q / (cfg.q - 1.0);
      return finish(tl::trivial_fs_decomposition(grid, f, qp).report, cfg);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return action ? action() : static_cast<int>(kUsage);
  } catch (const tl::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
}
