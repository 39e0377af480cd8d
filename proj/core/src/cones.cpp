#include "nehari/cones.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace nehari {

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 over the combined state.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

MembershipReport check_membership(const GridFunction& u, const ConeSpec& cone) {
  const Grid& g = u.grid();
  const int n = g.n;
  MembershipReport rep;

  double sup = norm(u, NormKind::Sup);
  const double tol = cone.tolerance * std::max(sup, 1e-300);

  rep.nonneg_min = *std::min_element(u.values().begin(), u.values().end());

  if (cone.kind == ConeKind::Kernel) {
    double qmin = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
      const double t = g.node(i);
      if (t >= 0.25 && t <= 0.75) qmin = std::min(qmin, u[i]);
    }
    rep.quarter_min_margin = qmin - 0.25 * sup;
    rep.member = rep.nonneg_min >= -tol && rep.quarter_min_margin >= -tol;
    return rep;
  }

  for (int i = 0; i < n; ++i) {
    rep.symmetry_defect = std::max(rep.symmetry_defect,
                                   std::abs(u[i] - u[n - 1 - i]));
  }
  for (int i = 1; i < n - 1; ++i) {
    rep.concavity_defect = std::max(rep.concavity_defect,
                                    u[i - 1] - 2 * u[i] + u[i + 1]);
  }
  const double w1p = norm(u, NormKind::W1p, cone.p);
  double hmarg = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= g.midpoint_index(); ++i) {
    hmarg = std::min(hmarg, u[i] - phi_weight(g.node(i), cone.p) * w1p);
  }
  rep.harnack_margin = hmarg;
  rep.member = rep.nonneg_min >= -tol && rep.symmetry_defect <= tol &&
               rep.concavity_defect <= tol && rep.harnack_margin >= -tol;
  return rep;
}

GridFunction normalize(const GridFunction& u, const ConeSpec& cone) {
  const double nrm = cone.cone_norm(u);
  if (nrm <= 0.0) throw ZeroDirectionError("cannot normalize the zero function");
  return u.scaled(1.0 / nrm);
}

namespace {

GridFunction plaplacian_sample(const ConeSpec& cone, const Grid& g, int index,
                               std::uint64_t seed) {
  const int n = g.n;
  const int mid = g.midpoint_index();
  std::vector<double> h(n, 1.0);
  if (index > 0) {
    std::mt19937_64 rng(split_seed(seed, index));
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const double c0 = unif(rng), c1 = unif(rng), c2 = unif(rng), c3 = unif(rng);
    for (int i = 0; i <= mid; ++i) {
      const double t = g.node(i);
      // nonnegative and nondecreasing on (0,1/2)
      h[i] = c0 + c1 * t + c2 * t * t + c3 * std::sin(M_PI * t);
    }
    for (int i = mid + 1; i < n; ++i) h[i] = h[n - 1 - i];
  }
  return normalize(plaplace_inverse(GridFunction(g, std::move(h)), cone.p),
                   cone);
}

GridFunction kernel_sample(const ConeSpec& cone, const Grid& g, int index,
                           std::uint64_t seed) {
  const int n = g.n;
  std::mt19937_64 rng(split_seed(seed, index));
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<double> density(n);
  switch (index % 3) {
    case 0:
      for (int i = 0; i < n; ++i) density[i] = unif(rng);
      break;
    case 1: {
      const double amp = 0.5 + 1.5 * unif(rng);
      for (int i = 0; i < n; ++i) {
        const double t = g.node(i);
        density[i] = amp * std::min(t, 1.0 - t);
      }
      break;
    }
    default: {
      const int power = 1 + static_cast<int>(2 * unif(rng));
      for (int i = 0; i < n; ++i) {
        const double t = g.node(i);
        density[i] = std::pow(t * (1.0 - t), power);
      }
      break;
    }
  }
  return normalize(kernel_apply(GridFunction(g, std::move(density))), cone);
}

}  // namespace

std::vector<GridFunction> sample_directions(const ConeSpec& cone, int count,
                                            std::uint64_t seed, int grid_n) {
  if (count < 1) throw Error("sample_directions: count must be >= 1");
  const Grid g = Grid::uniform(grid_n);
  std::vector<GridFunction> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    GridFunction v = cone.kind == ConeKind::Plaplacian
                         ? plaplacian_sample(cone, g, i, seed)
                         : kernel_sample(cone, g, i, seed);
    if (!check_membership(v, cone).member) {
      throw SamplerError("generated sample " + std::to_string(i) +
                         " failed cone membership");
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace nehari
