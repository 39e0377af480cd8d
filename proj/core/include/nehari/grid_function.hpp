#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "nehari/errors.hpp"

namespace nehari {

/// Uniform grid on [0,1] with an odd number of nodes, so composite Simpson
/// applies. Nodes are t_i = i*h with h = 1/(n-1).
struct Grid {
  int n = 0;
  double h = 0.0;

  static Grid uniform(int n);

  double node(int i) const { return i * h; }
  int midpoint_index() const { return (n - 1) / 2; }
  bool operator==(const Grid&) const = default;
};

/// Values of a real function at the nodes of a Grid. Immutable value type:
/// every operation returns a new function. May carry analytically-known
/// derivative values (set by the p-Laplacian inverse); linear operations
/// propagate them.
class GridFunction {
 public:
  GridFunction(Grid grid, std::vector<double> values);
  GridFunction(Grid grid, std::vector<double> values,
               std::vector<double> derivative);

  static GridFunction from_function(const Grid& grid,
                                    const std::function<double(double)>& f);
  static GridFunction constant(const Grid& grid, double c);
  static GridFunction zero(const Grid& grid) { return constant(grid, 0.0); }

  const Grid& grid() const { return grid_; }
  int size() const { return grid_.n; }
  double operator[](int i) const { return values_[i]; }
  const std::vector<double>& values() const { return values_; }

  bool has_derivative() const { return derivative_.has_value(); }
  const std::vector<double>& derivative_values() const;

  GridFunction scaled(double c) const;
  GridFunction plus(const GridFunction& other) const;
  GridFunction minus(const GridFunction& other) const;
  /// Pointwise map; drops any stored derivative.
  GridFunction map(const std::function<double(double)>& f) const;

 private:
  Grid grid_;
  std::vector<double> values_;
  std::optional<std::vector<double>> derivative_;

  void validate() const;
};

GridFunction operator*(double c, const GridFunction& f);
GridFunction operator+(const GridFunction& a, const GridFunction& b);
GridFunction operator-(const GridFunction& a, const GridFunction& b);

/// Composite Simpson approximation of the integral over [0,1]; exact for
/// polynomials of degree <= 3.
double integrate(const GridFunction& f);
double simpson(const std::vector<double>& values, double h);

/// Fourth-order cumulative antiderivative at the nodes (integral of the
/// local cubic interpolant over each panel). Exact for cubics.
std::vector<double> cumulative_integral(const std::vector<double>& values,
                                        double h);

/// Central differences at interior nodes, second-order one-sided stencils at
/// the ends. If f carries analytic derivative values, returns those instead.
GridFunction derivative(const GridFunction& f);

enum class NormKind { Sup, Lp, W1p, L2 };

double norm(const GridFunction& f, NormKind kind, double p = 2.0);

}  // namespace nehari
