#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nehari/cones.hpp"
#include "nehari/problem.hpp"

namespace nehari {

/// Everything a run needs: the problem, the cone, and execution knobs.
/// Parsed from a flat key=value file with dotted keys; see parse_config.
struct RunConfig {
  ProblemSpec problem = builtin_kernel_problem();
  ConeSpec cone{ConeKind::Kernel};
  std::vector<std::pair<double, double>> annuli;  // scan.annuli
  int directions = 50;
  int samples = 200;
  std::uint64_t seed = 42;
  int workers = 1;
  double omega = 0.5;
  int max_iters = 500;
};

/// Parses the flat config format: one `key = value` per line, `#` comments,
/// blank lines ignored. Recognized keys:
///
///   problem.operator        kernel (alias hammerstein-kernel) | plaplacian
///   problem.p               number > 1
///   problem.f.kind          quadratic | power_rational
///   problem.f.a2/.a1/.a0    quadratic coefficients
///   problem.f.exponent      power_rational exponent
///   problem.annulus.r       number >= 0
///   problem.annulus.R       number or "inf"
///   problem.beta            number in (0, 1/2)
///   problem.mode            maximize | minimize
///   problem.n               odd node count >= 3
///   problem.tol.residual / .t_bracket / .census / .symmetry
///              / .direction / .h2_threshold
///   cone.kind               kernel | plaplacian
///   run.seed, run.directions, run.samples, run.workers,
///   run.omega, run.max_iters
///   scan.annuli             comma list of r:R pairs, e.g. "0:10,10:1e8"
///
/// Unknown keys and malformed values raise ConfigError naming the key.
RunConfig parse_config(const std::string& text);

RunConfig load_config(const std::string& path);

/// Inverse of parse_config, up to comments and ordering: dumping and
/// re-parsing yields an equivalent RunConfig.
std::string dump_config(const RunConfig& cfg);

}  // namespace nehari
