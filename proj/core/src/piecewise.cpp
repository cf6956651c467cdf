#include "wdp/piecewise.hpp"

#include <stdexcept>

namespace wdp {

PiecewiseQuadratic::PiecewiseQuadratic(std::vector<Rational> breakpoints,
                                       std::vector<QuadPoly> pieces)
    : breaks_(std::move(breakpoints)), pieces_(std::move(pieces)) {
  if (pieces_.empty() || breaks_.size() != pieces_.size() + 1) {
    throw std::invalid_argument("piecewise: breakpoint/piece count mismatch");
  }
  for (std::size_t i = 0; i + 1 < breaks_.size(); ++i) {
    if (!(breaks_[i] < breaks_[i + 1])) {
      throw std::invalid_argument("piecewise: breakpoints not strictly increasing");
    }
  }
  for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) {
    const Rational& x = breaks_[i + 1];
    if (pieces_[i].eval(x) != pieces_[i + 1].eval(x)) {
      throw std::invalid_argument("piecewise: discontinuity at breakpoint " + x.str());
    }
  }
}

Rational PiecewiseQuadratic::eval(const Rational& x) const {
  if (x < domain_start() || x > domain_end()) {
    throw std::out_of_range("piecewise: evaluation outside domain");
  }
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (x <= breaks_[i + 1]) return pieces_[i].eval(x);
  }
  return pieces_.back().eval(x);
}

Rational PiecewiseQuadratic::integrate() const {
  Rational total;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    total += pieces_[i].integrate(breaks_[i], breaks_[i + 1]);
  }
  return total;
}

Rational PiecewiseQuadratic::integrate(const Rational& lo, const Rational& hi) const {
  if (lo > hi) return -integrate(hi, lo);
  if (lo < domain_start() || hi > domain_end()) {
    throw std::out_of_range("piecewise: integration outside domain");
  }
  Rational total;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const Rational a = max(lo, breaks_[i]);
    const Rational b = min(hi, breaks_[i + 1]);
    if (a < b) total += pieces_[i].integrate(a, b);
  }
  return total;
}

}  // namespace wdp
