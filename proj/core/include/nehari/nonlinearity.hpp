#pragma once

#include <cmath>
#include <functional>

namespace nehari {

/// Right-hand-side nonlinearity f(x,y). Built-in kinds cover the two worked
/// problems; Custom wraps an arbitrary callable. f0(x) = f(x,0) and
/// f_inf(x) = lim_{y->inf} f(x,y); for Custom the limit is approximated by
/// f(x, 1e12).
class Nonlinearity {
 public:
  enum class Kind { PowerRational, Quadratic, Custom };

  /// f(x,y) = x^q * (1 + 1/(1+|y|)) for x >= 0.
  static Nonlinearity power_rational(double exponent) {
    Nonlinearity f;
    f.kind_ = Kind::PowerRational;
    f.exponent_ = exponent;
    return f;
  }

  /// f(x,y) = a2 x^2 + a1 x + a0, independent of y.
  static Nonlinearity quadratic(double a2, double a1, double a0) {
    Nonlinearity f;
    f.kind_ = Kind::Quadratic;
    f.a2_ = a2;
    f.a1_ = a1;
    f.a0_ = a0;
    return f;
  }

  static Nonlinearity custom(std::function<double(double, double)> fn) {
    Nonlinearity f;
    f.kind_ = Kind::Custom;
    f.fn_ = std::move(fn);
    return f;
  }

  double operator()(double x, double y) const {
    switch (kind_) {
      case Kind::PowerRational:
        return std::pow(std::max(x, 0.0), exponent_) *
               (1.0 + 1.0 / (1.0 + std::abs(y)));
      case Kind::Quadratic:
        return a2_ * x * x + a1_ * x + a0_;
      case Kind::Custom:
        return fn_(x, y);
    }
    return 0.0;
  }

  double at_zero(double x) const { return (*this)(x, 0.0); }

  double at_infinity(double x) const {
    switch (kind_) {
      case Kind::PowerRational:
        return std::pow(std::max(x, 0.0), exponent_);
      case Kind::Quadratic:
        return (*this)(x, 0.0);
      case Kind::Custom:
        return fn_(x, kLimitProbe);  // documented approximation
    }
    return 0.0;
  }

  Kind kind() const { return kind_; }
  double exponent() const { return exponent_; }
  double a2() const { return a2_; }
  double a1() const { return a1_; }
  double a0() const { return a0_; }

  static constexpr double kLimitProbe = 1e12;

 private:
  Nonlinearity() = default;
  Kind kind_ = Kind::Quadratic;
  double exponent_ = 2.0;
  double a2_ = 0.0, a1_ = 0.0, a0_ = 0.0;
  std::function<double(double, double)> fn_;
};

}  // namespace nehari
