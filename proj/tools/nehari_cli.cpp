// Command-line front end: profile | solve | verify | scan, each driven by a
// flat key=value config file. Exit codes: 0 success/pass, 1 usage error,
// 2 hypothesis failure, 3 non-convergence.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nehari/config.hpp"
#include "nehari/report_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitHypothesisFail = 2;
constexpr int kExitNoConvergence = 3;

struct Options {
  std::string config_path;
  std::string out_dir = "nehari-out";
  long seed = -1;  // -1: keep the config's seed
  int workers = 0; // 0: keep the config's worker count
};

nehari::RunConfig load(const Options& opt) {
  nehari::RunConfig cfg = nehari::load_config(opt.config_path);
  if (opt.seed >= 0) cfg.seed = static_cast<std::uint64_t>(opt.seed);
  if (opt.workers > 0) cfg.workers = opt.workers;
  return cfg;
}

std::vector<double> profile_grid(const nehari::ProblemSpec& prob) {
  const double R = prob.effective_R();
  const double lo = std::max(prob.r, R * 1e-12);
  std::vector<double> ts(256);
  for (int i = 0; i < 256; ++i) {
    ts[i] = lo * std::pow(R / lo, i / 255.0);
  }
  return ts;
}

int run_profile(const Options& opt) {
  const nehari::RunConfig cfg = load(opt);
  std::filesystem::create_directories(opt.out_dir);
  auto dirs =
      nehari::sample_directions(cfg.cone, cfg.directions, cfg.seed,
                                cfg.problem.grid_n);
  for (int i = 0; i < cfg.directions; ++i) {
    nehari::RadialProfile profile =
        nehari::energy_profile(cfg.problem, dirs[i], profile_grid(cfg.problem));
    char name[64];
    std::snprintf(name, sizeof name, "profile_%03d.csv", i);
    nehari::emit_csv(profile, opt.out_dir + "/" + name);
  }
  std::cout << "wrote " << cfg.directions << " profiles to " << opt.out_dir
            << "\n";
  return kExitOk;
}

int run_solve(const Options& opt) {
  const nehari::RunConfig cfg = load(opt);
  std::filesystem::create_directories(opt.out_dir);
  try {
    const nehari::NehariSolveReport rep = nehari::nehari_solve(
        cfg.problem, cfg.cone, nehari::canonical_start(cfg.problem, cfg.cone),
        cfg.omega, cfg.max_iters);
    nehari::write_text_file(opt.out_dir + "/solve.json", nehari::to_json(rep));
    std::cout << (rep.converged ? "converged" : "did not converge")
              << "  t_v=" << rep.t_v << "  residual_sup=" << rep.residual_sup
              << "  iterations=" << rep.iterations << "\n";
    return rep.converged ? kExitOk : kExitNoConvergence;
  } catch (const nehari::BoundaryMaximumError& e) {
    std::cerr << "solve: " << e.what() << "\n";
    return kExitNoConvergence;
  }
}

int run_verify(const Options& opt) {
  const nehari::RunConfig cfg = load(opt);
  std::filesystem::create_directories(opt.out_dir);
  const nehari::ProblemSpec& prob = cfg.problem;
  std::vector<nehari::HypothesisReport> reports;

  if (prob.op == nehari::OperatorKind::HammersteinKernel) {
    // Condition checks run on the maximizing branch over the full capped
    // annulus; the configured annulus/mode only steer solve/scan.
    nehari::ProblemSpec full = prob;
    full.mode = nehari::RadialMode::Maximize;
    full.r = 0.0;
    full.R = nehari::ProblemSpec::kRadiusCap;
    reports.push_back(nehari::check_h1(full, cfg.cone, full.r,
                                       full.effective_R(), cfg.directions,
                                       cfg.seed, cfg.workers));
    reports.push_back(nehari::check_h2(full, cfg.cone, cfg.directions,
                                       cfg.seed, cfg.workers));
    reports.push_back(nehari::check_scaling(full, cfg.cone,
                                            nehari::ScalingMode::H3,
                                            std::min(cfg.samples, 20),
                                            cfg.seed));
    if (prob.f.kind() == nehari::Nonlinearity::Kind::Quadratic) {
      reports.push_back(nehari::certify_kernel_estimates(
          full, cfg.directions, cfg.seed, prob.grid_n, cfg.workers));
    }
  } else {
    const double R_eff = prob.effective_R();
    reports.push_back(
        nehari::check_H1(prob.f, R_eff, R_eff, cfg.samples, cfg.seed));
    if (prob.r > 0.0 && std::isfinite(prob.R)) {
      reports.push_back(nehari::check_H2(prob.f, prob.p, prob.r, prob.R,
                                         prob.beta, prob.grid_n));
    }
    if (std::isfinite(prob.R)) {
      reports.push_back(
          nehari::check_H3(prob.f, prob.p, prob.R, cfg.samples, cfg.seed));
    }
    reports.push_back(nehari::check_h1(prob, cfg.cone, prob.r, R_eff,
                                       cfg.directions, cfg.seed, cfg.workers));
    reports.push_back(nehari::check_h2(prob, cfg.cone, cfg.directions,
                                       cfg.seed, cfg.workers));
    reports.push_back(nehari::check_scaling(prob, cfg.cone,
                                            nehari::ScalingMode::H3,
                                            std::min(cfg.samples, 20),
                                            cfg.seed));
  }

  nehari::write_text_file(opt.out_dir + "/verify.json",
                          nehari::to_json(reports));
  bool all_ok = true;
  for (const auto& rep : reports) {
    std::cout << rep.condition << ": " << nehari::to_string(rep.verdict);
    if (!rep.note.empty()) std::cout << "  (" << rep.note << ")";
    std::cout << "\n";
    all_ok = all_ok && rep.ok();
  }
  return all_ok ? kExitOk : kExitHypothesisFail;
}

int run_scan(const Options& opt) {
  const nehari::RunConfig cfg = load(opt);
  if (cfg.annuli.empty()) {
    std::cerr << "scan: config has no scan.annuli\n";
    return kExitUsage;
  }
  std::filesystem::create_directories(opt.out_dir);
  auto reports = nehari::multiplicity_scan(cfg.problem, cfg.cone, cfg.annuli,
                                           cfg.omega, cfg.max_iters);
  nehari::write_text_file(opt.out_dir + "/scan.json", nehari::to_json(reports));
  bool all_ok = true;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& rep = reports[i];
    std::cout << "annulus " << i << " (" << cfg.annuli[i].first << ", "
              << cfg.annuli[i].second << "): "
              << (rep.converged ? "converged" : "failed");
    if (rep.converged) {
      std::cout << "  t_v=" << rep.t_v << "  residual_sup=" << rep.residual_sup;
    } else if (!rep.failure.empty()) {
      std::cout << "  (" << rep.failure << ")";
    }
    std::cout << "\n";
    all_ok = all_ok && rep.converged;
  }
  return all_ok ? kExitOk : kExitNoConvergence;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nehari-manifold solver for fixed-point problems u = T(u)"};
  app.require_subcommand(1);

  Options opt;
  int (*runner)(const Options&) = nullptr;
  for (auto [name, help, fn] :
       {std::tuple{"profile", "Emit radial energy profiles as CSV",
                   &run_profile},
        std::tuple{"solve", "Locate a fixed point on the Nehari manifold",
                   &run_solve},
        std::tuple{"verify", "Check the method's hypotheses on samples",
                   &run_verify},
        std::tuple{"scan", "Run the solver once per configured annulus",
                   &run_scan}}) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--config", opt.config_path, "Config file (key = value)")
        ->required();
    sub->add_option("--out", opt.out_dir, "Output directory");
    sub->add_option("--seed", opt.seed, "Override run.seed");
    sub->add_option("--workers", opt.workers, "Override run.workers");
    sub->callback([&runner, fn = fn] { runner = fn; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    return runner(opt);
  } catch (const nehari::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nehari::BoundaryMaximumError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoConvergence;
  } catch (const nehari::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitHypothesisFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
