#include "nehari/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "nehari/operators.hpp"
#include "nehari/parallel.hpp"

namespace nehari {

namespace {

constexpr double kTie = 1e-12;  // margins below this count as ties

// Certified coefficient boxes for the kernel example.
constexpr double kBoxLo[3] = {4.88e-6, 3e-2, 7.81e-3};
constexpr double kBoxHi[3] = {8.34e-4, 1.0, 8.34e-2};

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::SampledPass: return "sampled-pass";
  }
  return "?";
}

double estimate_cp(double p, int n) {
  const Grid g = Grid::uniform(n);
  const int mid = g.midpoint_index();
  double best = 0.0;
  bool any = false;
  for (int start = 0; start < 5; ++start) {
    std::vector<double> h(n, 1.0);
    if (start > 0) {
      std::mt19937_64 rng(split_seed(0x6370u, start));
      std::uniform_real_distribution<double> unif(0.2, 1.0);
      const double c0 = unif(rng), c1 = unif(rng), c2 = unif(rng);
      for (int i = 0; i <= mid; ++i) {
        const double t = g.node(i);
        h[i] = c0 + c1 * t + c2 * t * t;
      }
      for (int i = mid + 1; i < n; ++i) h[i] = h[n - 1 - i];
    }
    GridFunction u = plaplace_inverse(GridFunction(g, std::move(h)), p);
    double ratio = 0.0;
    bool converged = false;
    for (int iter = 0; iter < 200; ++iter) {
      const double w1p = norm(u, NormKind::W1p, p);
      if (w1p <= 0.0) break;
      u = u.scaled(1.0 / w1p);
      const double next = norm(u, NormKind::Lp, p);
      if (std::abs(next - ratio) <= 1e-14 * std::max(1.0, next)) {
        ratio = next;
        converged = true;
        break;
      }
      ratio = next;
      u = plaplace_inverse(
          u.map([p](double x) { return signed_power(x, p - 1.0); }), p);
    }
    if (converged) {
      any = true;
      best = std::max(best, ratio);
    }
  }
  if (!any) throw EstimationError("estimate_cp: no start converged");
  return best;
}

double compute_Phi(double beta, double p) {
  if (!(beta > 0.0 && beta < 0.5)) {
    throw DomainError("compute_Phi: beta must lie in (0, 1/2)");
  }
  const int m = 513;
  const double h = (0.5 - beta) / (m - 1);
  std::vector<double> vals(m);
  for (int i = 0; i < m; ++i) vals[i] = phi_weight(beta + i * h, p);
  return simpson(vals, h);
}

HypothesisReport check_H1(const Nonlinearity& f, double x_max, double y_max,
                          int samples, std::uint64_t seed) {
  HypothesisReport rep{"H1", Verdict::SampledPass, {}, samples, seed};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int s = 0; s < samples; ++s) {
    const double x = x_max * unif(rng);
    const double x2 = x + (x_max - x) * unif(rng);
    double y1 = y_max * unif(rng), y2 = y_max * unif(rng);
    if (y1 > y2) std::swap(y1, y2);
    const double scale = std::max({1.0, std::abs(f(x, y1)), std::abs(f(x2, y1))});
    if (f(x, y1) - f(x, y2) < -kTie * scale) {
      rep.verdict = Verdict::Fail;
      rep.note = "f(x,.) not decreasing";
      rep.witnesses = {{"x", x}, {"y1", y1}, {"y2", y2},
                       {"f1", f(x, y1)}, {"f2", f(x, y2)}};
      return rep;
    }
    if (f(x2, y1) - f(x, y1) < -kTie * scale) {
      rep.verdict = Verdict::Fail;
      rep.note = "f(.,y) not increasing";
      rep.witnesses = {{"x1", x}, {"x2", x2}, {"y", y1},
                       {"f1", f(x, y1)}, {"f2", f(x2, y1)}};
      return rep;
    }
    if (std::abs(f(x, y2) - f(x, -y2)) > kTie * scale) {
      rep.verdict = Verdict::Fail;
      rep.note = "f not even in y";
      rep.witnesses = {{"x", x}, {"y", y2}};
      return rep;
    }
  }
  return rep;
}

HypothesisReport check_H2(const Nonlinearity& f, double p, double r, double R,
                          double beta, int n, bool reversed) {
  if (!(r > 0.0 && r < R && std::isfinite(R))) {
    throw DomainError("check_H2 requires 0 < r < R < inf");
  }
  const double cp = estimate_cp(p, n);
  const double phib = phi_weight(beta, p);
  const double Phi = compute_Phi(beta, p);
  HypothesisReport rep{reversed ? "H2*" : "H2", Verdict::Pass};
  double m1, m2;
  if (!reversed) {
    m1 = std::pow(r, p - 1.0) / cp - f.at_zero(r);
    m2 = f.at_infinity(R * phib) - std::pow(R, p - 1.0) / (2.0 * Phi);
  } else {
    m1 = f.at_infinity(r * phib) / std::pow(r * phib, p - 1.0) -
         1.0 / (2.0 * Phi * std::pow(phib, p - 1.0));
    m2 = 1.0 / cp - f.at_zero(R) / std::pow(R, p - 1.0);
  }
  rep.witnesses = {{"c_p", cp}, {"Phi", Phi}, {"margin_r", m1}, {"margin_R", m2}};
  if (m1 <= 0.0 || m2 <= 0.0) rep.verdict = Verdict::Fail;
  return rep;
}

HypothesisReport check_H3(const Nonlinearity& f, double p, double R,
                          int samples, std::uint64_t seed) {
  if (!std::isfinite(R)) throw DomainError("check_H3 requires finite R");
  HypothesisReport rep{"H3", Verdict::SampledPass, {}, samples, seed};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const int kSteps = 24;
  for (int s = 0; s < samples; ++s) {
    const double x = 0.05 + 1.95 * unif(rng);
    const double y = (2.0 * unif(rng) - 1.0) * 2.0;
    double prev = std::numeric_limits<double>::quiet_NaN();
    for (int k = 0; k <= kSteps; ++k) {
      const double t = R * std::pow(1e-4, 1.0 - static_cast<double>(k) / kSteps);
      const double ratio = f(t * x, t * y) / std::pow(t, p - 1.0);
      if (k > 0 && ratio - prev <= kTie * std::max(1.0, std::abs(ratio))) {
        rep.verdict = Verdict::Fail;
        rep.note = "ratio not strictly increasing";
        rep.witnesses = {{"x", x}, {"y", y}, {"t", t},
                         {"ratio", ratio}, {"prev", prev}};
        return rep;
      }
      prev = ratio;
    }
  }
  return rep;
}

HypothesisReport check_h1(const ProblemSpec& prob, const ConeSpec& cone,
                          double r, double R_eff, int direction_count,
                          std::uint64_t seed, int workers) {
  HypothesisReport rep{"h1", Verdict::SampledPass, {}, direction_count, seed};
  auto dirs = sample_directions(cone, direction_count, seed, prob.grid_n);

  ProblemSpec sub = prob;
  sub.r = r;
  sub.R = R_eff;

  struct PerDir {
    bool ok = false;
    double t_v = 0.0;
    std::string reason;
  };
  std::vector<PerDir> results(direction_count);
  const bool maximizing = prob.mode == RadialMode::Maximize;
  const double lo = std::max(r, R_eff * 1e-12);

  parallel_for(direction_count, workers, [&](int i) {
    PerDir& out = results[i];
    try {
      out.t_v = find_tv(sub, dirs[i], r, R_eff);
    } catch (const Error& e) {
      out.reason = e.what();
      return;
    }
    // Full-range census: the located extremum must be the only one of its
    // kind on the interval.
    std::vector<double> grid(128);
    for (int k = 0; k < 128; ++k) {
      grid[k] = lo * std::pow(R_eff / lo, static_cast<double>(k) / 127);
    }
    RadialProfile profile = energy_profile(sub, dirs[i], std::move(grid));
    int extrema = 0;
    double t_census = 0.0;
    for (const auto& c : profile.census) {
      const bool matches = maximizing ? c.kind == CriticalPoint::Kind::Maximum
                                      : c.kind == CriticalPoint::Kind::Minimum;
      if (matches) {
        ++extrema;
        t_census = c.t;
      }
    }
    if (extrema != 1) {
      out.reason = "census found " + std::to_string(extrema) + " extrema";
      return;
    }
    if (std::abs(t_census - out.t_v) > 1e-6 * std::max(1.0, out.t_v)) {
      out.reason = "census extremum disagrees with t_v";
      return;
    }
    out.ok = true;
  });

  double r0 = std::numeric_limits<double>::infinity(), R0 = 0.0;
  for (int i = 0; i < direction_count; ++i) {
    if (!results[i].ok) {
      rep.verdict = Verdict::Fail;
      rep.note = "direction " + std::to_string(i) + ": " + results[i].reason;
      rep.witnesses = {{"direction", static_cast<double>(i)}};
      return rep;
    }
    r0 = std::min(r0, results[i].t_v);
    R0 = std::max(R0, results[i].t_v);
  }
  rep.witnesses = {{"r0", r0}, {"R0", R0}};
  return rep;
}

HypothesisReport check_h2(const ProblemSpec& prob, const ConeSpec& cone,
                          int direction_count, std::uint64_t seed,
                          int workers) {
  HypothesisReport rep{"h2", Verdict::SampledPass, {}, direction_count, seed};
  auto dirs = sample_directions(cone, direction_count, seed, prob.grid_n);
  std::vector<double> norms(direction_count,
                            std::numeric_limits<double>::quiet_NaN());
  std::vector<std::string> failures(direction_count);
  parallel_for(direction_count, workers, [&](int i) {
    try {
      const double t_v = find_tv(prob, dirs[i], prob.r, prob.effective_R());
      norms[i] = cone.cone_norm(apply_T(prob, dirs[i].scaled(t_v)));
    } catch (const Error& e) {
      failures[i] = e.what();
    }
  });
  double lowest = std::numeric_limits<double>::infinity();
  for (int i = 0; i < direction_count; ++i) {
    if (!failures[i].empty()) {
      rep.verdict = Verdict::Fail;
      rep.note = "direction " + std::to_string(i) + ": " + failures[i];
      return rep;
    }
    lowest = std::min(lowest, norms[i]);
  }
  rep.witnesses = {{"min_T_norm", lowest},
                   {"threshold", prob.tol.h2_threshold}};
  if (lowest <= prob.tol.h2_threshold) rep.verdict = Verdict::Fail;
  return rep;
}

HypothesisReport check_scaling(const ProblemSpec& prob, const ConeSpec& cone,
                               ScalingMode mode, int samples,
                               std::uint64_t seed) {
  const char* name = mode == ScalingMode::H3   ? "h3"
                     : mode == ScalingMode::H4 ? "h4"
                                               : "h5";
  HypothesisReport rep{name, Verdict::SampledPass, {}, samples, seed};
  auto dirs = sample_directions(cone, samples, seed, prob.grid_n);
  std::mt19937_64 rng(split_seed(seed, 0x5ca1e));
  std::uniform_real_distribution<double> unif(0.5, 2.0);

  const int kScan = 64;
  for (int s = 0; s < samples; ++s) {
    GridFunction u = dirs[s].scaled(unif(rng));
    const GridFunction w = normalize(u, cone);
    auto g = [&](double t) { return F_eval(prob, u.scaled(t), u, w); };
    double prev_t = 1e-3, prev_g = g(prev_t);
    bool degenerate = true;
    for (int k = 1; k < kScan; ++k) {
      const double t = 1e-3 * std::pow(1e6, static_cast<double>(k) / (kScan - 1));
      const double gt = g(t);
      if (std::abs(gt) > 1e-14) degenerate = false;
      if (prev_g * gt < 0.0) {
        double a = prev_t, b = t, ga = prev_g;
        while (b - a > 1e-12 * b) {
          const double m = 0.5 * (a + b), gm = g(m);
          if (ga * gm <= 0.0) {
            b = m;
          } else {
            a = m;
            ga = gm;
          }
        }
        const double root = 0.5 * (a + b);
        const bool ok = mode == ScalingMode::H3
                            ? std::abs(root - 1.0) <= 1e-8
                            : mode == ScalingMode::H4 ? root >= 1.0 - 1e-8
                                                      : root <= 1.0 + 1e-8;
        if (!ok) {
          rep.verdict = Verdict::Fail;
          rep.witnesses = {{"sample", static_cast<double>(s)}, {"root", root}};
          return rep;
        }
      }
      prev_t = t;
      prev_g = gt;
    }
    if (degenerate) continue;  // excluded by the condition's own premise
  }
  return rep;
}

double alpha_moment(const GridFunction& v, int k) {
  GridFunction powered = v.map([k](double x) {
    double result = 1.0;
    for (int j = 0; j < k; ++j) result *= x;
    return result;
  });
  GridFunction inner = kernel_apply(powered);
  std::vector<double> prod(v.size());
  for (int i = 0; i < v.size(); ++i) prod[i] = inner[i] * v[i];
  return simpson(prod, v.grid().h);
}

double alpha_moment_trapezoid(const GridFunction& v, int k) {
  const Grid& g = v.grid();
  const int n = g.n;
  const double h = g.h;
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    const double t = g.node(i);
    double row = 0.0;
    for (int j = 0; j < n; ++j) {
      const double s = g.node(j);
      const double kernel = (t <= s) ? t * (1.0 - s) : s * (1.0 - t);
      double vk = 1.0;
      for (int q = 0; q < k; ++q) vk *= v[j];
      double term = kernel * vk;
      if (j == 0 || j == n - 1) term *= 0.5;
      row += term;
    }
    double contrib = row * h * v[i];
    if (i == 0 || i == n - 1) contrib *= 0.5;
    total += contrib * h;
  }
  return total;
}

CubicReport cubic_analysis(double b2, double b1, double b0) {
  if (!(b2 > 0.0)) throw DomainError("cubic_analysis requires b2 > 0");
  CubicReport rep;
  rep.b2 = b2;
  rep.b1 = b1;
  rep.b0 = b0;
  rep.discriminant = b1 * b1 - 4.0 * b2 * b0;
  if (rep.discriminant <= 0.0) return rep;
  rep.two_roots = true;
  rep.t_plus = (b1 + std::sqrt(rep.discriminant)) / (2.0 * b2);
  rep.t_minus = b0 / (b2 * rep.t_plus);
  auto g_at = [b1, b0](double t) { return t * (b1 * t - 4.0 * b0) / 6.0; };
  rep.g_minus = g_at(rep.t_minus);
  rep.g_plus = g_at(rep.t_plus);
  rep.plus_is_global_max = rep.g_plus > 0.0 && rep.g_minus < 0.0;
  return rep;
}

HypothesisReport certify_kernel_estimates(const ProblemSpec& prob,
                                          int direction_count,
                                          std::uint64_t seed, int n,
                                          int workers) {
  if (prob.op != OperatorKind::HammersteinKernel ||
      prob.f.kind() != Nonlinearity::Kind::Quadratic) {
    throw DomainError("kernel estimates require the quadratic kernel problem");
  }
  HypothesisReport rep{"kernel-estimates", Verdict::SampledPass, {},
                       direction_count, seed};
  ConeSpec cone{ConeKind::Kernel};
  auto dirs = sample_directions(cone, direction_count, seed, n);

  struct PerDir {
    double slack = 0.0, disc = 0.0, t_plus = 0.0, l2sq = 0.0, xcheck = 0.0;
    bool ok = false;
    std::string reason;
  };
  std::vector<PerDir> results(direction_count);
  const double a2 = prob.f.a2(), a1 = prob.f.a1(), a0 = prob.f.a0();

  parallel_for(direction_count, workers, [&](int i) {
    PerDir& out = results[i];
    const GridFunction& v = dirs[i];
    const double alpha0 = alpha_moment(v, 0);
    const double alpha1 = alpha_moment(v, 1);
    const double alpha2 = alpha_moment(v, 2);
    const double l2sq = std::pow(norm(v, NormKind::L2), 2.0);
    const double triple[3] = {a2 * alpha2, l2sq - a1 * alpha1, a0 * alpha0};

    out.l2sq = l2sq;
    out.slack = std::numeric_limits<double>::infinity();
    for (int c = 0; c < 3; ++c) {
      out.slack = std::min({out.slack, triple[c] - kBoxLo[c],
                            kBoxHi[c] - triple[c]});
    }
    out.xcheck = 0.0;
    const double alphas[3] = {alpha0, alpha1, alpha2};
    for (int kmom = 0; kmom < 3; ++kmom) {
      out.xcheck = std::max(out.xcheck,
                            std::abs(alphas[kmom] -
                                     alpha_moment_trapezoid(v, kmom)));
    }
    CubicReport cubic = cubic_analysis(triple[0], triple[1], triple[2]);
    out.disc = cubic.discriminant;
    out.t_plus = cubic.t_plus;

    if (out.slack < 0.0) {
      out.reason = "coefficient triple outside certified box";
    } else if (l2sq < 1.0 / 32.0) {
      out.reason = "|v|_L2^2 below 1/32";
    } else if (out.xcheck > 1e-7) {
      out.reason = "trapezoid cross-check exceeded 1e-7";
    } else if (!cubic.two_roots || cubic.discriminant <= 4e-4) {
      out.reason = "discriminant bound violated";
    } else if (!(cubic.t_plus > 10.0 && cubic.t_plus < 1e7)) {
      out.reason = "t_plus outside (10, 1e7)";
    } else if (!cubic.plus_is_global_max) {
      out.reason = "t_plus is not the global maximum";
    } else {
      out.ok = true;
    }
  });

  double min_slack = std::numeric_limits<double>::infinity();
  double min_disc = std::numeric_limits<double>::infinity();
  double tp_lo = std::numeric_limits<double>::infinity(), tp_hi = 0.0;
  double max_xcheck = 0.0;
  for (int i = 0; i < direction_count; ++i) {
    if (!results[i].ok) {
      rep.verdict = Verdict::Fail;
      rep.note = "direction " + std::to_string(i) + ": " + results[i].reason;
      return rep;
    }
    min_slack = std::min(min_slack, results[i].slack);
    min_disc = std::min(min_disc, results[i].disc);
    tp_lo = std::min(tp_lo, results[i].t_plus);
    tp_hi = std::max(tp_hi, results[i].t_plus);
    max_xcheck = std::max(max_xcheck, results[i].xcheck);
  }
  rep.witnesses = {{"min_slack", min_slack},
                   {"min_discriminant", min_disc},
                   {"t_plus_min", tp_lo},
                   {"t_plus_max", tp_hi},
                   {"max_quadrature_crosscheck", max_xcheck}};
  return rep;
}

}  // namespace nehari
