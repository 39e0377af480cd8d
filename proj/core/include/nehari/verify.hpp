#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nehari/cones.hpp"
#include "nehari/problem.hpp"
#include "nehari/solver.hpp"

namespace nehari {

enum class Verdict { Pass, Fail, SampledPass };

std::string to_string(Verdict v);

/// Per-condition verdict with numeric witnesses. SampledPass means the
/// condition held on every drawn sample; it is evidence, not proof.
struct HypothesisReport {
  std::string condition;
  Verdict verdict = Verdict::Fail;
  std::map<std::string, double> witnesses;
  int samples = 0;
  std::uint64_t seed = 0;
  std::string note;

  bool ok() const { return verdict != Verdict::Fail; }
};

/// Best Rayleigh ratio |u|_p / |u|_{1,p} over a minimizing sequence
/// (normalized inverse-duality ascent from 5 seeded starts). For p = 2 the
/// exact value is 1/pi.
double estimate_cp(double p, int n);

/// Phi = int_beta^{1/2} phi(s) ds by Simpson quadrature.
double compute_Phi(double beta, double p);

HypothesisReport check_H1(const Nonlinearity& f, double x_max, double y_max,
                          int samples, std::uint64_t seed);

/// The two (H2) inequalities f_0(r) < r^{p-1}/c_p and
/// f_inf(R phi(beta)) > R^{p-1}/(2 Phi). With reversed = true, checks the
/// minimum-variant pair instead.
HypothesisReport check_H2(const Nonlinearity& f, double p, double r, double R,
                          double beta, int n, bool reversed = false);

HypothesisReport check_H3(const Nonlinearity& f, double p, double R,
                          int samples, std::uint64_t seed);

/// Runs find_tv plus a full-range census for sampled directions;
/// sampled-pass iff every direction has a unique interior extremum of the
/// problem's radial mode. Reports empirical r0 = min t_v, R0 = max t_v.
HypothesisReport check_h1(const ProblemSpec& prob, const ConeSpec& cone,
                          double r, double R_eff, int direction_count,
                          std::uint64_t seed, int workers = 1);

/// Samples u = t_v v and reports min |T(u)| in the cone norm.
HypothesisReport check_h2(const ProblemSpec& prob, const ConeSpec& cone,
                          int direction_count, std::uint64_t seed,
                          int workers = 1);

enum class ScalingMode { H3, H4, H5 };

/// Solves F(t u, u, u/|u|) = 0 in t for sampled u and verifies the mode's
/// conclusion (t = 1, t >= 1, t <= 1).
HypothesisReport check_scaling(const ProblemSpec& prob, const ConeSpec& cone,
                               ScalingMode mode, int samples,
                               std::uint64_t seed);

/// alpha_v(k) = int int k(t,s) v(s)^k v(t) ds dt via the Green
/// representation (inner O(n)) and outer Simpson.
double alpha_moment(const GridFunction& v, int k);

/// Independent cross-check: direct double trapezoid with each row split at
/// the kernel diagonal.
double alpha_moment_trapezoid(const GridFunction& v, int k);

struct CubicReport {
  double b2 = 0, b1 = 0, b0 = 0;
  double discriminant = 0;
  bool two_roots = false;
  double t_minus = 0, t_plus = 0;
  double g_minus = 0, g_plus = 0;  // g at the two roots
  bool plus_is_global_max = false; // g(t+) > 0 and g(t-) < 0
};

/// Critical points of g(t) = -b2 t^3/3 + b1 t^2/2 - b0 t. Roots by the
/// cancellation-free quadratic formula; g values via the factored identity
/// g(t) = t (b1 t - 4 b0) / 6.
CubicReport cubic_analysis(double b2, double b1, double b0);

/// For sampled kernel-cone directions: coefficient triples inside the
/// certified intervals, |v|^2_{L2} >= 1/32, discriminant and t_+ bounds,
/// and the trapezoid cross-check of the moments.
HypothesisReport certify_kernel_estimates(const ProblemSpec& prob,
                                          int direction_count,
                                          std::uint64_t seed, int n,
                                          int workers = 1);

}  // namespace nehari
