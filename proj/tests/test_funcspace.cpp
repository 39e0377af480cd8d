#include <cmath>

#include "doctest.h"
#include "nehari/grid_function.hpp"

using namespace nehari;

TEST_CASE("uniform grid validation") {
  CHECK_THROWS_AS(Grid::uniform(4), InvalidGridError);
  CHECK_THROWS_AS(Grid::uniform(1), InvalidGridError);
  const Grid g = Grid::uniform(5);
  CHECK(g.h == doctest::Approx(0.25));
  CHECK(g.node(4) == doctest::Approx(1.0));
  CHECK(g.midpoint_index() == 2);
}

TEST_CASE("simpson is exact on cubics") {
  const Grid g = Grid::uniform(9);
  GridFunction f = GridFunction::from_function(
      g, [](double t) { return 2 * t * t * t - t * t + 3 * t - 1; });
  // exact: 1/2 - 1/3 + 3/2 - 1 = 2/3
  CHECK(integrate(f) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));

  GridFunction q = GridFunction::from_function(
      g, [](double t) { return t * (1 - t); });
  CHECK(integrate(q) == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
}

TEST_CASE("simpson converges at fourth order") {
  auto err = [](int n) {
    const Grid g = Grid::uniform(n);
    GridFunction f =
        GridFunction::from_function(g, [](double t) { return std::exp(t); });
    return std::abs(integrate(f) - (std::exp(1.0) - 1.0));
  };
  const double ratio = err(65) / err(129);
  CHECK(ratio > 12.0);
  CHECK(ratio < 20.0);
}

TEST_CASE("cumulative integral is exact on cubics") {
  const Grid g = Grid::uniform(17);
  std::vector<double> vals(g.n);
  for (int i = 0; i < g.n; ++i) {
    const double t = g.node(i);
    vals[i] = t * t * t - 2 * t + 1;
  }
  const auto cum = cumulative_integral(vals, g.h);
  for (int i = 0; i < g.n; ++i) {
    const double t = g.node(i);
    const double exact = t * t * t * t / 4 - t * t + t;
    CHECK(cum[i] == doctest::Approx(exact).epsilon(1e-13));
  }
}

TEST_CASE("derivative is exact on quadratics") {
  const Grid g = Grid::uniform(33);
  GridFunction f = GridFunction::from_function(
      g, [](double t) { return 3 * t * t - t; });
  GridFunction df = derivative(f);
  for (int i = 0; i < g.n; ++i) {
    CHECK(df[i] == doctest::Approx(6 * g.node(i) - 1).epsilon(1e-12));
  }
}

TEST_CASE("derivative prefers stored analytic values") {
  const Grid g = Grid::uniform(5);
  GridFunction f(g, {0, 1, 2, 3, 4}, {7, 7, 7, 7, 7});
  CHECK(f.has_derivative());
  GridFunction df = derivative(f);
  for (int i = 0; i < g.n; ++i) CHECK(df[i] == 7.0);
  // map drops the analytic derivative
  CHECK(!f.map([](double x) { return x; }).has_derivative());
  // linear operations keep it
  CHECK(f.scaled(2.0).has_derivative());
  CHECK(f.scaled(2.0).derivative_values()[0] == 14.0);
}

TEST_CASE("norms of f(t) = t") {
  const Grid g = Grid::uniform(1025);
  GridFunction f = GridFunction::from_function(g, [](double t) { return t; });
  CHECK(norm(f, NormKind::Sup) == doctest::Approx(1.0));
  CHECK(norm(f, NormKind::L2) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
  CHECK(norm(f, NormKind::Lp, 3.0) ==
        doctest::Approx(std::pow(0.25, 1.0 / 3.0)).epsilon(1e-10));
  // f' = 1, so the W1p norm is the Lp norm of 1
  CHECK(norm(f, NormKind::W1p, 2.0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("norm rejects p <= 1") {
  const Grid g = Grid::uniform(5);
  GridFunction f = GridFunction::constant(g, 1.0);
  CHECK_THROWS_AS(norm(f, NormKind::Lp, 1.0), InvalidExponentError);
  CHECK_THROWS_AS(norm(f, NormKind::W1p, 0.5), InvalidExponentError);
}

TEST_CASE("norm homogeneity and arithmetic") {
  const Grid g = Grid::uniform(65);
  GridFunction f = GridFunction::from_function(
      g, [](double t) { return std::sin(3 * t) + t; });
  GridFunction h = GridFunction::from_function(
      g, [](double t) { return t * t; });
  for (auto kind : {NormKind::Sup, NormKind::L2, NormKind::W1p}) {
    CHECK(norm(f.scaled(-2.5), kind) ==
          doctest::Approx(2.5 * norm(f, kind)).epsilon(1e-12));
  }
  GridFunction sum = f + h;
  GridFunction diff = sum - h;
  for (int i = 0; i < g.n; ++i) {
    CHECK(sum[i] == doctest::Approx(f[i] + h[i]));
    CHECK(diff[i] == doctest::Approx(f[i]).epsilon(1e-13));
  }
  GridFunction scaled = 3.0 * f;
  CHECK(scaled[10] == doctest::Approx(3.0 * f[10]));
}

TEST_CASE("grid mismatch rejected") {
  GridFunction a = GridFunction::constant(Grid::uniform(5), 1.0);
  GridFunction b = GridFunction::constant(Grid::uniform(7), 1.0);
  CHECK_THROWS_AS(a.plus(b), InvalidGridError);
}
