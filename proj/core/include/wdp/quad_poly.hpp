#pragma once

#include <string>

#include "wdp/rational.hpp"

namespace wdp {

// Cubic polynomial k1*x + k2*x^2 + k3*x^3, the shape produced by
// antidifferentiating a quadratic with zero constant of integration.
struct CubicPrimitive {
  Rational k1, k2, k3;

  Rational eval(const Rational& x) const {
    return ((k3 * x + k2) * x + k1) * x;
  }
};

// Quadratic polynomial c0 + c1*x + c2*x^2 with exact coefficients.
struct QuadPoly {
  Rational c0, c1, c2;

  Rational eval(const Rational& x) const { return (c2 * x + c1) * x + c0; }

  CubicPrimitive antiderivative() const {
    return {c0, c1 / Rational(2), c2 / Rational(3)};
  }

  // Exact signed integral over [lo, hi].
  Rational integrate(const Rational& lo, const Rational& hi) const {
    const CubicPrimitive f = antiderivative();
    return f.eval(hi) - f.eval(lo);
  }

  bool is_zero() const { return c0.is_zero() && c1.is_zero() && c2.is_zero(); }

  friend bool operator==(const QuadPoly& a, const QuadPoly& b) {
    return a.c0 == b.c0 && a.c1 == b.c1 && a.c2 == b.c2;
  }

  std::string str(const std::string& var = "x") const;
};

}  // namespace wdp
