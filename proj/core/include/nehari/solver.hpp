#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nehari/cones.hpp"
#include "nehari/grid_function.hpp"
#include "nehari/problem.hpp"

namespace nehari {

struct CriticalPoint {
  double t = 0.0;
  enum class Kind { Maximum, Minimum } kind = Kind::Maximum;
};

/// Radial potential and cumulative energy samples along one direction,
/// with the refined critical-point census.
struct RadialProfile {
  GridFunction direction;
  std::vector<double> t;
  std::vector<double> potential;  // F(T(tv), tv, v)
  std::vector<double> energy;     // E(v)(t), anchored at E(0) = 0
  std::vector<CriticalPoint> census;
};

struct NehariSolveReport {
  GridFunction u;
  GridFunction direction;
  double t_v = 0.0;
  double residual_sup = 0.0;
  double residual_w1p = 0.0;
  bool annulus_lower_ok = false;  // r0 < |u|
  bool annulus_upper_ok = false;  // |u| < R0
  MembershipReport cone_membership;
  int iterations = 0;
  bool converged = false;
  std::string failure;  // empty on success
};

/// dE(v)/dt at t: F_eval(prob, T(tv), tv, v). Well defined at t = 0 by
/// direct evaluation.
double radial_potential(const ProblemSpec& prob, const GridFunction& v,
                        double t);

/// Cumulative Simpson of the radial potential over the given increasing
/// t-grid (panel midpoints are evaluated), anchored at E(0) = 0. The census
/// is filled by critical_census.
RadialProfile energy_profile(const ProblemSpec& prob, const GridFunction& v,
                             std::vector<double> t_grid);

/// Locates the interior extremum of E(v) on [r, R_eff] (maximum, or minimum
/// in Minimize mode): coarse scan (256 samples, log-spaced when r = 0 or
/// R/r > 100) then golden-section refinement. Throws BoundaryMaximumError
/// when the extremum sits at a bracket endpoint and AmbiguousMaximumError on
/// two coarse extrema of equal energy within the census tolerance.
double find_tv(const ProblemSpec& prob, const GridFunction& v, double r,
               double R_eff);

/// Refines every sign change of the potential by bisection; +to- is a
/// maximum, -to+ a minimum.
std::vector<CriticalPoint> critical_census(const ProblemSpec& prob,
                                           const RadialProfile& profile);

/// Damped direction iteration on the Nehari manifold:
/// v <- normalize(v + omega (normalize(T(t_v v)) - v)). Damping is halved
/// when the direction change grows three times in a row. Non-convergence is
/// reported, not thrown; boundary-maximum errors from find_tv propagate.
NehariSolveReport nehari_solve(const ProblemSpec& prob, const ConeSpec& cone,
                               const GridFunction& v0, double omega = 0.5,
                               int max_iters = 500);

/// Runs nehari_solve once per annulus (ordered, disjoint up to touching)
/// from the canonical start; per-annulus failures are recorded and the scan
/// continues.
std::vector<NehariSolveReport> multiplicity_scan(
    const ProblemSpec& prob, const ConeSpec& cone,
    const std::vector<std::pair<double, double>>& annuli, double omega = 0.5,
    int max_iters = 500);

struct PicardResult {
  GridFunction u;
  bool converged = false;
  int iterations = 0;
};

/// Plain fixed-point iteration u <- T(u); independent oracle for solutions.
PicardResult picard_oracle(const ProblemSpec& prob, const GridFunction& u0,
                           double tol, int max_iters);

/// Deterministic cone-appropriate start: normalized tent for the kernel
/// cone, normalized J^{-1}(1) for the p-Laplacian cone.
GridFunction canonical_start(const ProblemSpec& prob, const ConeSpec& cone);

}  // namespace nehari
