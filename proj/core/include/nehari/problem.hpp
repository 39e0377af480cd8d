#pragma once

#include <limits>

#include "nehari/nonlinearity.hpp"

namespace nehari {

enum class OperatorKind { PlaplacianBvp, HammersteinKernel };

/// Whether the radial energy is maximized (the default) or minimized along
/// each direction. The minimize variant negates the potential wherever an
/// extremum is located; everything else is unchanged.
enum class RadialMode { Maximize, Minimize };

struct Tolerances {
  double residual = 1e-8;        // fixed-point residual in the cone norm
  double t_bracket = 1e-10;      // relative bracket width for t_v
  double census = 1e-9;          // critical-point refinement / tie detection
  double symmetry = 1e-8;        // relative symmetry defect for J^{-1} input
  double direction = 1e-13;      // sup change of direction iterate
  double h2_threshold = 1e-6;    // screen for numerical zeros of inf |T(u)|
};

/// Full description of one fixed-point problem u = T(u).
struct ProblemSpec {
  OperatorKind op = OperatorKind::HammersteinKernel;
  double p = 2.0;  // p-Laplacian exponent; unused for the kernel operator
  Nonlinearity f = Nonlinearity::quadratic(0, 0, 1);
  double r = 0.0;
  double R = std::numeric_limits<double>::infinity();
  double beta = 0.25;  // (0,1/2); p-Laplacian (H2) only
  RadialMode mode = RadialMode::Maximize;
  int grid_n = 1025;
  Tolerances tol;

  /// R = infinity is replaced by this cap for the t_v search.
  static constexpr double kRadiusCap = 1e8;

  double effective_R() const {
    return std::isinf(R) ? kRadiusCap : R;
  }
};

/// The kernel example: T(u) = int k(.,s) f(u(s)) ds with the Green kernel of
/// -u'' and f(x) = 1e-2 x^2 + 2.5e-3 x + 1, posed on the quarter-min cone in
/// C[0,1]. Energy extrema are searched in minimize mode on (0,10), where the
/// Picard-reachable fixed point lives; interval certification uses the
/// maximize branch over the full capped annulus.
ProblemSpec builtin_kernel_problem(int grid_n = 1025);

/// The p-Laplacian example: p = 2, f(x,y) = x^2 (1 + 1/(1+|y|)),
/// annulus (0.1, 300), beta = 1/4, on the Harnack cone in W^{1,p}_0(0,1).
ProblemSpec builtin_plaplacian_problem(int grid_n = 1025);

}  // namespace nehari
