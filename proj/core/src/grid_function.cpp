#include "nehari/grid_function.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace nehari {

Grid Grid::uniform(int n) {
  if (n < 3 || n % 2 == 0) {
    throw InvalidGridError("grid node count must be odd and >= 3, got " +
                           std::to_string(n));
  }
  return Grid{n, 1.0 / (n - 1)};
}

GridFunction::GridFunction(Grid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  validate();
}

GridFunction::GridFunction(Grid grid, std::vector<double> values,
                           std::vector<double> derivative)
    : grid_(grid), values_(std::move(values)), derivative_(std::move(derivative)) {
  validate();
}

void GridFunction::validate() const {
  if (static_cast<int>(values_.size()) != grid_.n) {
    throw InvalidGridError("value count does not match node count");
  }
  if (derivative_ && static_cast<int>(derivative_->size()) != grid_.n) {
    throw InvalidGridError("derivative count does not match node count");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw InvalidGridError("non-finite node value");
  }
  if (derivative_) {
    for (double v : *derivative_) {
      if (!std::isfinite(v)) throw InvalidGridError("non-finite derivative value");
    }
  }
}

GridFunction GridFunction::from_function(const Grid& grid,
                                         const std::function<double(double)>& f) {
  std::vector<double> vals(grid.n);
  for (int i = 0; i < grid.n; ++i) vals[i] = f(grid.node(i));
  return GridFunction(grid, std::move(vals));
}

GridFunction GridFunction::constant(const Grid& grid, double c) {
  return GridFunction(grid, std::vector<double>(grid.n, c));
}

const std::vector<double>& GridFunction::derivative_values() const {
  if (!derivative_) throw Error("no stored derivative values");
  return *derivative_;
}

GridFunction GridFunction::scaled(double c) const {
  std::vector<double> vals(values_);
  for (double& v : vals) v *= c;
  if (derivative_) {
    std::vector<double> dv(*derivative_);
    for (double& v : dv) v *= c;
    return GridFunction(grid_, std::move(vals), std::move(dv));
  }
  return GridFunction(grid_, std::move(vals));
}

GridFunction GridFunction::plus(const GridFunction& other) const {
  if (!(grid_ == other.grid_)) throw InvalidGridError("grid mismatch");
  std::vector<double> vals(values_);
  for (int i = 0; i < grid_.n; ++i) vals[i] += other.values_[i];
  if (derivative_ && other.derivative_) {
    std::vector<double> dv(*derivative_);
    for (int i = 0; i < grid_.n; ++i) dv[i] += (*other.derivative_)[i];
    return GridFunction(grid_, std::move(vals), std::move(dv));
  }
  return GridFunction(grid_, std::move(vals));
}

GridFunction GridFunction::minus(const GridFunction& other) const {
  return plus(other.scaled(-1.0));
}

GridFunction GridFunction::map(const std::function<double(double)>& f) const {
  std::vector<double> vals(grid_.n);
  for (int i = 0; i < grid_.n; ++i) vals[i] = f(values_[i]);
  return GridFunction(grid_, std::move(vals));
}

GridFunction operator*(double c, const GridFunction& f) { return f.scaled(c); }
GridFunction operator+(const GridFunction& a, const GridFunction& b) {
  return a.plus(b);
}
GridFunction operator-(const GridFunction& a, const GridFunction& b) {
  return a.minus(b);
}

double simpson(const std::vector<double>& values, double h) {
  const int n = static_cast<int>(values.size());
  double sum = values.front() + values.back();
  for (int i = 1; i < n - 1; ++i) sum += values[i] * (i % 2 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

double integrate(const GridFunction& f) {
  return simpson(f.values(), f.grid().h);
}

std::vector<double> cumulative_integral(const std::vector<double>& values,
                                        double h) {
  const int n = static_cast<int>(values.size());
  const std::vector<double>& f = values;
  std::vector<double> out(n, 0.0);
  for (int i = 0; i + 1 < n; ++i) {
    double seg;
    if (i == 0) {
      seg = h / 24.0 * (9 * f[0] + 19 * f[1] - 5 * f[2] + f[3]);
    } else if (i == n - 2) {
      seg = h / 24.0 * (f[n - 4] - 5 * f[n - 3] + 19 * f[n - 2] + 9 * f[n - 1]);
    } else {
      seg = h / 24.0 * (-f[i - 1] + 13 * f[i] + 13 * f[i + 1] - f[i + 2]);
    }
    out[i + 1] = out[i] + seg;
  }
  return out;
}

GridFunction derivative(const GridFunction& f) {
  const Grid& g = f.grid();
  if (f.has_derivative()) return GridFunction(g, f.derivative_values());
  const int n = g.n;
  const double h = g.h;
  std::vector<double> d(n);
  d[0] = (-3 * f[0] + 4 * f[1] - f[2]) / (2 * h);
  d[n - 1] = (3 * f[n - 1] - 4 * f[n - 2] + f[n - 3]) / (2 * h);
  for (int i = 1; i < n - 1; ++i) d[i] = (f[i + 1] - f[i - 1]) / (2 * h);
  return GridFunction(g, std::move(d));
}

double norm(const GridFunction& f, NormKind kind, double p) {
  switch (kind) {
    case NormKind::Sup: {
      double m = 0.0;
      for (double v : f.values()) m = std::max(m, std::abs(v));
      return m;
    }
    case NormKind::L2:
      return norm(f, NormKind::Lp, 2.0);
    case NormKind::Lp: {
      if (p <= 1.0) throw InvalidExponentError("Lp norm requires p > 1");
      std::vector<double> pw(f.size());
      for (int i = 0; i < f.size(); ++i) pw[i] = std::pow(std::abs(f[i]), p);
      return std::pow(simpson(pw, f.grid().h), 1.0 / p);
    }
    case NormKind::W1p: {
      if (p <= 1.0) throw InvalidExponentError("W1p norm requires p > 1");
      return norm(derivative(f), NormKind::Lp, p);
    }
  }
  throw Error("unreachable norm kind");
}

}  // namespace nehari
