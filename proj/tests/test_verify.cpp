#include <cmath>
#include <random>

#include "doctest.h"
#include "nehari/operators.hpp"
#include "nehari/verify.hpp"

using namespace nehari;

TEST_CASE("estimate_cp approaches 1/pi for p = 2") {
  CHECK(estimate_cp(2.0, 513) == doctest::Approx(1.0 / M_PI).epsilon(2e-3));
}

TEST_CASE("compute_Phi closed case") {
  // p = 2: phi(t) = t(1-t), so int_{1/4}^{1/2} phi = 11/192.
  CHECK(compute_Phi(0.25, 2.0) == doctest::Approx(11.0 / 192.0).epsilon(1e-12));
  CHECK_THROWS_AS(compute_Phi(0.5, 2.0), DomainError);
  CHECK_THROWS_AS(compute_Phi(-0.1, 2.0), DomainError);
}

TEST_CASE("H1 holds for the power-rational nonlinearity") {
  HypothesisReport rep =
      check_H1(Nonlinearity::power_rational(2.0), 300.0, 300.0, 200, 42);
  CHECK(rep.verdict == Verdict::SampledPass);
}

TEST_CASE("H1 rejects a nonlinearity that is odd in y") {
  auto f = Nonlinearity::custom([](double x, double y) { return x - y; });
  HypothesisReport rep = check_H1(f, 10.0, 10.0, 200, 42);
  CHECK(rep.verdict == Verdict::Fail);
  CHECK(!rep.note.empty());
}

TEST_CASE("H2 margins for the built-in p-Laplacian example") {
  HypothesisReport rep = check_H2(Nonlinearity::power_rational(2.0), 2.0, 0.1,
                                  300.0, 0.25, 1025);
  CHECK(rep.verdict == Verdict::Pass);
  // f_0(0.1) = 0.02 against 0.1/c_2 = pi/10; margin about 0.294
  CHECK(rep.witnesses.at("margin_r") ==
        doctest::Approx(0.1 * M_PI - 0.02).epsilon(1e-2));
  // f_inf(300 * 3/16) = 56.25^2 against 300 * 96/11; margin about 545.9
  CHECK(rep.witnesses.at("margin_R") ==
        doctest::Approx(56.25 * 56.25 - 300.0 * 96.0 / 11.0).epsilon(1e-6));
}

TEST_CASE("H2 fails for a linear nonlinearity") {
  HypothesisReport rep = check_H2(Nonlinearity::quadratic(0, 1, 0), 2.0, 0.1,
                                  300.0, 0.25, 513);
  CHECK(rep.verdict == Verdict::Fail);
}

TEST_CASE("H3 strict scaling growth") {
  CHECK(check_H3(Nonlinearity::power_rational(2.0), 2.0, 300.0, 100, 42)
            .verdict == Verdict::SampledPass);
  // f(x) = x^{p-1}: the ratio is constant in t, not strictly increasing
  CHECK(check_H3(Nonlinearity::quadratic(0, 1, 0), 2.0, 300.0, 100, 42)
            .verdict == Verdict::Fail);
}

TEST_CASE("cubic analysis of the reference coefficients") {
  CubicReport rep = cubic_analysis(1e-4, 0.5, 0.04);
  REQUIRE(rep.two_roots);
  CHECK(rep.discriminant == doctest::Approx(0.25 - 1.6e-5).epsilon(1e-12));
  CHECK(rep.t_minus == doctest::Approx(0.0800013).epsilon(1e-3));
  CHECK(rep.t_plus == doctest::Approx(4999.92).epsilon(1e-4));
  CHECK(rep.g_minus < 0.0);
  CHECK(rep.g_plus > 0.0);
  CHECK(rep.plus_is_global_max);
}

TEST_CASE("cubic analysis edge cases") {
  CHECK_THROWS_AS(cubic_analysis(0.0, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(cubic_analysis(-1.0, 1.0, 1.0), DomainError);
  CubicReport rep = cubic_analysis(1.0, 1.0, 1.0);  // disc = -3
  CHECK(!rep.two_roots);
  rep = cubic_analysis(1.0, 2.0, 1.0);  // disc = 0: double root boundary
  CHECK(!rep.two_roots);
}

TEST_CASE("cubic roots satisfy the derivative equation") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double b2 = 1e-5 + unif(rng);
    const double b1 = unif(rng) * 2.0;
    const double b0 = unif(rng) * 0.05;
    CubicReport rep = cubic_analysis(b2, b1, b0);
    if (!rep.two_roots) continue;
    for (double t : {rep.t_minus, rep.t_plus}) {
      const double dg = -b2 * t * t + b1 * t - b0;
      CHECK(std::abs(dg) <= 1e-9 * std::max(1.0, b2 * t * t));
    }
    CHECK(rep.t_minus < rep.t_plus);
  }
}

TEST_CASE("alpha moments: exact constant case and cross-check") {
  const Grid g = Grid::uniform(513);
  GridFunction one = GridFunction::constant(g, 1.0);
  // int int k(t,s) ds dt = int t(1-t)/2 dt = 1/12
  CHECK(alpha_moment(one, 0) == doctest::Approx(1.0 / 12.0).epsilon(1e-13));
  CHECK(alpha_moment_trapezoid(one, 0) ==
        doctest::Approx(1.0 / 12.0).epsilon(1e-5));

  ConeSpec cone{ConeKind::Kernel};
  for (const auto& v : sample_directions(cone, 6, 42, 513)) {
    // 0 <= v <= 1, so the moments decrease in k
    const double a0 = alpha_moment(v, 0);
    const double a1 = alpha_moment(v, 1);
    const double a2 = alpha_moment(v, 2);
    CHECK(a0 > 0.0);
    CHECK(a1 <= a0);
    CHECK(a2 <= a1);
    for (int k = 0; k < 3; ++k) {
      CHECK(std::abs(alpha_moment(v, k) - alpha_moment_trapezoid(v, k)) <=
            1e-6);
    }
  }
}

TEST_CASE("sampled condition checks on the kernel problem") {
  ProblemSpec full = builtin_kernel_problem(513);
  full.mode = RadialMode::Maximize;
  full.r = 0.0;
  full.R = ProblemSpec::kRadiusCap;
  ConeSpec cone{ConeKind::Kernel};

  HypothesisReport h1 = check_h1(full, cone, 0.0, full.effective_R(), 10, 42, 2);
  CHECK(h1.verdict == Verdict::SampledPass);
  CHECK(h1.witnesses.at("r0") > 10.0);
  CHECK(h1.witnesses.at("R0") < 1e7);

  HypothesisReport h2 = check_h2(full, cone, 10, 42, 2);
  CHECK(h2.verdict == Verdict::SampledPass);
  CHECK(h2.witnesses.at("min_T_norm") > full.tol.h2_threshold);

  CHECK(check_scaling(full, cone, ScalingMode::H3, 10, 42).verdict ==
        Verdict::SampledPass);
  CHECK(check_scaling(full, cone, ScalingMode::H4, 10, 42).verdict ==
        Verdict::SampledPass);
}

TEST_CASE("check_h1 reports the monotone-energy failure") {
  ProblemSpec prob = builtin_plaplacian_problem(257);
  prob.f = Nonlinearity::quadratic(0, 1, 0);
  ConeSpec cone{ConeKind::Plaplacian, 2.0};
  HypothesisReport rep =
      check_h1(prob, cone, prob.r, prob.effective_R(), 5, 42);
  CHECK(rep.verdict == Verdict::Fail);
  CHECK(rep.note.find("endpoint") != std::string::npos);
}

TEST_CASE("kernel estimate certification") {
  ProblemSpec full = builtin_kernel_problem(1025);
  full.mode = RadialMode::Maximize;
  full.r = 0.0;
  full.R = ProblemSpec::kRadiusCap;
  HypothesisReport rep = certify_kernel_estimates(full, 10, 42, 1025, 2);
  CHECK(rep.verdict == Verdict::SampledPass);
  CHECK(rep.witnesses.at("min_slack") >= 0.0);
  CHECK(rep.witnesses.at("min_discriminant") > 4e-4);
  CHECK(rep.witnesses.at("t_plus_min") > 10.0);
  CHECK(rep.witnesses.at("t_plus_max") < 1e7);
  CHECK(rep.witnesses.at("max_quadrature_crosscheck") <= 1e-7);

  ProblemSpec wrong = builtin_plaplacian_problem(257);
  CHECK_THROWS_AS(certify_kernel_estimates(wrong, 2, 42, 257), DomainError);
}
