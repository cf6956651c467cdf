#pragma once

#include <vector>

#include "wdp/quad_poly.hpp"
#include "wdp/rational.hpp"

namespace wdp {

// Continuous piecewise-quadratic function on [breakpoints.front(),
// breakpoints.back()]. Construction validates that breakpoints are strictly
// increasing and that adjacent pieces agree at every interior breakpoint.
class PiecewiseQuadratic {
 public:
  PiecewiseQuadratic(std::vector<Rational> breakpoints,
                     std::vector<QuadPoly> pieces);

  const std::vector<Rational>& breakpoints() const { return breaks_; }
  const std::vector<QuadPoly>& pieces() const { return pieces_; }
  const Rational& domain_start() const { return breaks_.front(); }
  const Rational& domain_end() const { return breaks_.back(); }

  // Value at x, which must lie inside the domain.
  Rational eval(const Rational& x) const;
  Rational end_value() const { return pieces_.back().eval(breaks_.back()); }

  // Exact integral over the whole domain.
  Rational integrate() const;
  // Exact integral over [lo, hi], a subinterval of the domain.
  Rational integrate(const Rational& lo, const Rational& hi) const;

 private:
  std::vector<Rational> breaks_;
  std::vector<QuadPoly> pieces_;
};

}  // namespace wdp
