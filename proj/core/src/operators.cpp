#include "nehari/operators.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace nehari {

namespace {

// 16-point Gauss-Legendre on [-1,1] (positive half; symmetric).
constexpr std::array<double, 8> kGlx = {
    0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
    0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
    0.9445750230732326, 0.9894009349916499};
constexpr std::array<double, 8> kGlw = {
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
    0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
    0.0622535239386479, 0.0271524594117541};

// Cubic Lagrange interpolation of nodal data at x, using the four nodes
// starting at index j0.
double cubic_interp(const std::vector<double>& vals, double h, int j0,
                    double x) {
  double result = 0.0;
  for (int k = 0; k < 4; ++k) {
    double L = 1.0;
    const double tk = (j0 + k) * h;
    for (int m = 0; m < 4; ++m) {
      if (m == k) continue;
      const double tm = (j0 + m) * h;
      L *= (x - tm) / (tk - tm);
    }
    result += vals[j0 + k] * L;
  }
  return result;
}

}  // namespace

double phi_weight(double t, double p) {
  if (t < 0.0 || t > 0.5) throw DomainError("phi_weight: t outside [0, 1/2]");
  if (p <= 1.0) throw InvalidExponentError("phi_weight requires p > 1");
  const double e = p / (p - 1.0);
  return (p - 1.0) / (2.0 * p) * (1.0 - std::pow(1.0 - 2.0 * t, e));
}

double signed_power(double x, double alpha) {
  if (x == 0.0) return 0.0;
  return std::copysign(std::pow(std::abs(x), alpha), x);
}

GridFunction plaplace_inverse(const GridFunction& h, double p, double sym_tol) {
  if (p <= 1.0) throw InvalidExponentError("plaplace_inverse requires p > 1");
  const Grid& g = h.grid();
  const int n = g.n;
  const double step = g.h;
  const int mid = g.midpoint_index();

  double sup = norm(h, NormKind::Sup);
  if (sup == 0.0) {
    return GridFunction(g, std::vector<double>(n, 0.0),
                        std::vector<double>(n, 0.0));
  }
  double defect = 0.0;
  for (int i = 0; i < n; ++i) {
    defect = std::max(defect, std::abs(h[i] - h[n - 1 - i]));
  }
  if (defect > sym_tol * sup) {
    throw AsymmetricInputError(
        "plaplace_inverse: input not symmetric about 1/2 (relative defect " +
        std::to_string(defect / sup) + ")");
  }

  // mu at the nodes: mu_i = int_{t_i}^{1/2} h, antisymmetric about 1/2.
  std::vector<double> anti = cumulative_integral(h.values(), step);
  std::vector<double> mu(n);
  for (int i = 0; i <= mid; ++i) mu[i] = anti[mid] - anti[i];
  for (int i = mid + 1; i < n; ++i) mu[i] = -mu[n - 1 - i];

  const double inv_exp = 1.0 / (p - 1.0);
  std::vector<double> du(n);
  for (int i = 0; i < n; ++i) du[i] = signed_power(mu[i], inv_exp);

  // u by per-panel Gauss-Legendre of phi^{-1}(mu), mu interpolated cubically.
  std::vector<double> u(n, 0.0);
  for (int i = 0; i < mid; ++i) {
    const double a = i * step;
    const double c = a + 0.5 * step;
    const int j0 = std::clamp(i - 1, 0, n - 4);
    double seg = 0.0;
    for (int q = 0; q < 8; ++q) {
      const double dx = 0.5 * step * kGlx[q];
      seg += kGlw[q] * (signed_power(cubic_interp(mu, step, j0, c - dx), inv_exp) +
                        signed_power(cubic_interp(mu, step, j0, c + dx), inv_exp));
    }
    u[i + 1] = u[i] + 0.5 * step * seg;
  }
  for (int i = mid + 1; i < n; ++i) u[i] = u[n - 1 - i];

  return GridFunction(g, std::move(u), std::move(du));
}

GridFunction nemytskii(const Nonlinearity& f, const GridFunction& u,
                       const GridFunction& du) {
  if (!(u.grid() == du.grid())) throw InvalidGridError("grid mismatch");
  std::vector<double> vals(u.size());
  for (int i = 0; i < u.size(); ++i) vals[i] = f(u[i], du[i]);
  return GridFunction(u.grid(), std::move(vals));
}

GridFunction kernel_apply(const GridFunction& g) {
  const Grid& grid = g.grid();
  const int n = grid.n;
  std::vector<double> sg(n), cg(n);
  for (int i = 0; i < n; ++i) {
    const double t = grid.node(i);
    sg[i] = t * g[i];
    cg[i] = (1.0 - t) * g[i];
  }
  std::vector<double> A = cumulative_integral(sg, grid.h);
  std::vector<double> B = cumulative_integral(cg, grid.h);
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) {
    const double t = grid.node(i);
    out[i] = (1.0 - t) * A[i] + t * (B[n - 1] - B[i]);
  }
  out[0] = 0.0;
  out[n - 1] = 0.0;
  return GridFunction(grid, std::move(out));
}

GridFunction hammerstein(const Nonlinearity& f, const GridFunction& u) {
  return kernel_apply(u.map([&f](double x) { return f(x, 0.0); }));
}

GridFunction apply_T(const ProblemSpec& prob, const GridFunction& u) {
  if (prob.op == OperatorKind::HammersteinKernel) {
    return hammerstein(prob.f, u);
  }
  GridFunction rhs = nemytskii(prob.f, u, derivative(u));
  return plaplace_inverse(rhs, prob.p, prob.tol.symmetry);
}

double duality_pairing(const GridFunction& u, const GridFunction& w, double p) {
  GridFunction du = derivative(u);
  GridFunction dw = derivative(w);
  std::vector<double> prod(u.size());
  for (int i = 0; i < u.size(); ++i) {
    prod[i] = signed_power(du[i], p - 1.0) * dw[i];
  }
  return simpson(prod, u.grid().h);
}

double F_eval(const ProblemSpec& prob, const GridFunction& u,
              const GridFunction& v, const GridFunction& w) {
  if (prob.op == OperatorKind::PlaplacianBvp) {
    return duality_pairing(v, w, prob.p) - duality_pairing(u, w, prob.p);
  }
  std::vector<double> prod(u.size());
  for (int i = 0; i < u.size(); ++i) prod[i] = (v[i] - u[i]) * w[i];
  return simpson(prod, u.grid().h);
}

ProblemSpec builtin_kernel_problem(int grid_n) {
  ProblemSpec prob;
  prob.op = OperatorKind::HammersteinKernel;
  prob.f = Nonlinearity::quadratic(1e-2, 2.5e-3, 1.0);
  prob.r = 0.0;
  prob.R = 10.0;
  prob.mode = RadialMode::Minimize;
  prob.grid_n = grid_n;
  return prob;
}

ProblemSpec builtin_plaplacian_problem(int grid_n) {
  ProblemSpec prob;
  prob.op = OperatorKind::PlaplacianBvp;
  prob.p = 2.0;
  prob.f = Nonlinearity::power_rational(2.0);
  prob.r = 0.1;
  prob.R = 300.0;
  prob.beta = 0.25;
  prob.mode = RadialMode::Maximize;
  prob.grid_n = grid_n;
  prob.tol.residual = 1e-6;
  return prob;
}

}  // namespace nehari
