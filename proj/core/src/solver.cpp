#include "nehari/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nehari/operators.hpp"

namespace nehari {

namespace {

double mode_sign(const ProblemSpec& prob) {
  return prob.mode == RadialMode::Minimize ? -1.0 : 1.0;
}

std::vector<double> scan_grid(double lo, double hi, int count, bool log_spaced) {
  std::vector<double> ts(count);
  if (log_spaced) {
    const double la = std::log(lo), lb = std::log(hi);
    for (int i = 0; i < count; ++i) {
      ts[i] = std::exp(la + (lb - la) * i / (count - 1));
    }
  } else {
    for (int i = 0; i < count; ++i) ts[i] = lo + (hi - lo) * i / (count - 1);
  }
  return ts;
}

}  // namespace

double radial_potential(const ProblemSpec& prob, const GridFunction& v,
                        double t) {
  GridFunction u = v.scaled(t);
  return F_eval(prob, apply_T(prob, u), u, v);
}

RadialProfile energy_profile(const ProblemSpec& prob, const GridFunction& v,
                             std::vector<double> t_grid) {
  RadialProfile profile{v, std::move(t_grid), {}, {}, {}};
  const int m = static_cast<int>(profile.t.size());
  profile.potential.resize(m);
  profile.energy.resize(m);
  double prev_t = 0.0;
  double prev_pot = radial_potential(prob, v, 0.0);
  double energy = 0.0;
  for (int k = 0; k < m; ++k) {
    const double t = profile.t[k];
    const double pot = radial_potential(prob, v, t);
    const double mid = radial_potential(prob, v, 0.5 * (prev_t + t));
    energy += (t - prev_t) / 6.0 * (prev_pot + 4.0 * mid + pot);
    profile.potential[k] = pot;
    profile.energy[k] = energy;
    prev_t = t;
    prev_pot = pot;
  }
  profile.census = critical_census(prob, profile);
  return profile;
}

double find_tv(const ProblemSpec& prob, const GridFunction& v, double r,
               double R_eff) {
  const double sgn = mode_sign(prob);
  const int kScan = 256;
  const bool log_spaced = (r == 0.0) || (R_eff / r > 100.0);
  const double lo = std::max(r, R_eff * 1e-12);
  std::vector<double> ts = scan_grid(lo, R_eff, kScan, log_spaced);

  std::vector<double> pot(kScan), energy(kScan);
  for (int i = 0; i < kScan; ++i) pot[i] = radial_potential(prob, v, ts[i]);
  energy[0] = 0.0;  // common additive constant; only differences matter
  for (int i = 1; i < kScan; ++i) {
    energy[i] = energy[i - 1] +
                0.5 * (pot[i] + pot[i - 1]) * (ts[i] - ts[i - 1]);
  }

  int best = 0;
  for (int i = 1; i < kScan; ++i) {
    if (sgn * energy[i] > sgn * energy[best]) best = i;
  }
  if (best == 0 || best == kScan - 1) {
    throw BoundaryMaximumError(
        "radial energy extremum at bracket endpoint t = " +
        std::to_string(ts[best]));
  }
  // Tie detection among coarse local extrema.
  double second = -std::numeric_limits<double>::infinity();
  for (int i = 1; i < kScan - 1; ++i) {
    if (i == best) continue;
    if (sgn * energy[i] > sgn * energy[i - 1] &&
        sgn * energy[i] > sgn * energy[i + 1]) {
      second = std::max(second, sgn * energy[i]);
    }
  }
  const double scale = std::max(1.0, std::abs(energy[best]));
  if (std::isfinite(second) &&
      sgn * energy[best] - second <= prob.tol.census * scale) {
    throw AmbiguousMaximumError("two coarse energy extrema of equal height");
  }

  // Golden-section refinement on E, evaluated incrementally from the left
  // bracket anchor by a single Simpson panel.
  double a = ts[best - 1], b = ts[best + 1];
  const double anchor = a;
  const double pot_anchor = pot[best - 1];
  auto eval = [&](double x) {
    const double pm = radial_potential(prob, v, 0.5 * (anchor + x));
    const double px = radial_potential(prob, v, x);
    return sgn * (x - anchor) / 6.0 * (pot_anchor + 4.0 * pm + px);
  };
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - gr * (b - a), d = a + gr * (b - a);
  double fc = eval(c), fd = eval(d);
  while (b - a > prob.tol.t_bracket * std::max(1.0, b)) {
    if (fc < fd) {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = eval(d);
    } else {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = eval(c);
    }
  }
  return 0.5 * (a + b);
}

std::vector<CriticalPoint> critical_census(const ProblemSpec& prob,
                                           const RadialProfile& profile) {
  std::vector<CriticalPoint> census;
  const int m = static_cast<int>(profile.t.size());
  if (m < 3) return census;
  for (int k = 0; k + 1 < m; ++k) {
    const double fa = profile.potential[k];
    const double fb = profile.potential[k + 1];
    if (fa == 0.0 || fb == 0.0 || fa * fb > 0.0) continue;
    double a = profile.t[k], b = profile.t[k + 1];
    double va = fa;
    while (b - a > prob.tol.census * std::max(1.0, b)) {
      const double mid = 0.5 * (a + b);
      const double vm = radial_potential(prob, profile.direction, mid);
      if (vm == 0.0) {
        a = b = mid;
        break;
      }
      if (va * vm < 0.0) {
        b = mid;
      } else {
        a = mid;
        va = vm;
      }
    }
    census.push_back({0.5 * (a + b), fa > 0.0 ? CriticalPoint::Kind::Maximum
                                              : CriticalPoint::Kind::Minimum});
  }
  return census;
}

NehariSolveReport nehari_solve(const ProblemSpec& prob, const ConeSpec& cone,
                               const GridFunction& v0, double omega,
                               int max_iters) {
  GridFunction v = normalize(v0, cone);
  NehariSolveReport rep{v, v};

  double prev_change = std::numeric_limits<double>::infinity();
  int grow_streak = 0;
  double t_v = 0.0;
  bool stalled = false;

  for (int iter = 1; iter <= max_iters; ++iter) {
    rep.iterations = iter;
    t_v = find_tv(prob, v, prob.r, prob.effective_R());
    GridFunction u = v.scaled(t_v);
    GridFunction Tu = apply_T(prob, u);
    GridFunction res = Tu.minus(u);
    const double residual = cone.cone_norm(res);
    rep.u = u;
    rep.direction = v;
    rep.t_v = t_v;
    rep.residual_sup = norm(res, NormKind::Sup);
    rep.residual_w1p = norm(res, NormKind::W1p, prob.p);
    if (residual <= prob.tol.residual) {
      rep.converged = true;
      break;
    }
    if (stalled) break;

    GridFunction w = normalize(Tu, cone);
    GridFunction v_next =
        normalize(v.plus(w.minus(v).scaled(omega)), cone);
    const double change = cone.cone_norm(v_next.minus(v));
    if (change > prev_change) {
      if (++grow_streak >= 3) {
        omega *= 0.5;
        grow_streak = 0;
      }
    } else {
      grow_streak = 0;
    }
    prev_change = change;
    v = v_next;
    // One final t_v/residual evaluation after the direction stops moving.
    if (change <= prob.tol.direction) stalled = true;
  }

  if (!rep.converged) rep.failure = "max-iterations";
  const double radius = cone.cone_norm(rep.u);
  rep.annulus_lower_ok = radius > prob.r;
  rep.annulus_upper_ok = radius < prob.effective_R();
  rep.cone_membership = check_membership(rep.u, cone);
  return rep;
}

std::vector<NehariSolveReport> multiplicity_scan(
    const ProblemSpec& prob, const ConeSpec& cone,
    const std::vector<std::pair<double, double>>& annuli, double omega,
    int max_iters) {
  std::vector<NehariSolveReport> reports;
  for (const auto& [ri, Ri] : annuli) {
    ProblemSpec sub = prob;
    sub.r = ri;
    sub.R = Ri;
    try {
      reports.push_back(
          nehari_solve(sub, cone, canonical_start(sub, cone), omega, max_iters));
    } catch (const Error& e) {
      NehariSolveReport failed{GridFunction::zero(Grid::uniform(prob.grid_n)),
                               GridFunction::zero(Grid::uniform(prob.grid_n))};
      failed.failure = e.what();
      reports.push_back(std::move(failed));
    }
  }
  return reports;
}

PicardResult picard_oracle(const ProblemSpec& prob, const GridFunction& u0,
                           double tol, int max_iters) {
  PicardResult result{u0};
  GridFunction u = u0;
  for (int iter = 1; iter <= max_iters; ++iter) {
    GridFunction next = apply_T(prob, u);
    const double change = norm(next.minus(u), NormKind::Sup);
    u = next;
    result.u = u;
    result.iterations = iter;
    if (norm(u, NormKind::Sup) > 10.0 * ProblemSpec::kRadiusCap) {
      return result;  // divergent
    }
    if (change <= tol) {
      result.converged = true;
      return result;
    }
  }
  return result;
}

GridFunction canonical_start(const ProblemSpec& prob, const ConeSpec& cone) {
  const Grid g = Grid::uniform(prob.grid_n);
  if (cone.kind == ConeKind::Kernel) {
    GridFunction tent = GridFunction::from_function(
        g, [](double t) { return std::min(t, 1.0 - t); });
    return normalize(tent, cone);
  }
  return normalize(plaplace_inverse(GridFunction::constant(g, 1.0), cone.p),
                   cone);
}

}  // namespace nehari
