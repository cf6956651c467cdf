#include "wdp/polytope.hpp"

#include <algorithm>
#include <stdexcept>

namespace wdp {

namespace {

// Solves M x = rhs for a dim x dim exact system by Gaussian elimination.
// Returns nothing when M is singular.
std::optional<std::vector<Rational>> solve_square(
    std::vector<std::vector<Rational>> m, std::vector<Rational> rhs) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    const Rational inv = Rational(1) / m[col][col];
    for (std::size_t j = col; j < n; ++j) m[col][j] *= inv;
    rhs[col] *= inv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col].is_zero()) continue;
      const Rational f = m[row][col];
      for (std::size_t j = col; j < n; ++j) m[row][j] -= f * m[col][j];
      rhs[row] -= f * rhs[col];
    }
  }
  return rhs;
}

}  // namespace

Polytope::Polytope(std::vector<std::string> variables,
                   std::vector<AffineForm> nonneg)
    : vars_(std::move(variables)), constraints_(std::move(nonneg)) {
  if (vars_.empty() || vars_.size() > 3) {
    throw std::invalid_argument("polytope: dimension must be 1..3");
  }
  for (const AffineForm& g : constraints_) {
    for (const std::string& name : g.variables()) {
      if (std::find(vars_.begin(), vars_.end(), name) == vars_.end()) {
        throw std::invalid_argument("polytope: constraint uses unknown variable " + name);
      }
    }
  }
}

bool Polytope::contains(const Point& p) const {
  for (const AffineForm& g : constraints_) {
    if (g.eval(p).is_negative()) return false;
  }
  return true;
}

const std::vector<Point>& Polytope::vertices() const {
  if (enumerated_) return vertices_;
  const std::size_t dim = vars_.size();
  const std::size_t n = constraints_.size();
  if (n < dim) throw std::invalid_argument("polytope: too few constraints");

  // Axis boundedness screen: every variable needs pressure from both sides.
  for (const std::string& name : vars_) {
    bool lower = false, upper = false;
    for (const AffineForm& g : constraints_) {
      const Rational c = g.coeff(name);
      if (c.is_positive()) lower = true;
      if (c.is_negative()) upper = true;
    }
    if (!lower || !upper) {
      throw std::invalid_argument("polytope: variable " + name +
                                  " is unbounded");
    }
  }

  std::vector<Point> found;
  std::vector<std::size_t> idx(dim);
  const auto consider = [&](const std::vector<std::size_t>& active) {
    std::vector<std::vector<Rational>> m(dim, std::vector<Rational>(dim));
    std::vector<Rational> rhs(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      const AffineForm& g = constraints_[active[i]];
      for (std::size_t j = 0; j < dim; ++j) m[i][j] = g.coeff(vars_[j]);
      rhs[i] = -g.constant();
    }
    const auto solution = solve_square(std::move(m), std::move(rhs));
    if (!solution) return;
    Point p;
    for (std::size_t j = 0; j < dim; ++j) p[vars_[j]] = (*solution)[j];
    if (!contains(p)) return;
    if (std::find(found.begin(), found.end(), p) == found.end()) {
      found.push_back(std::move(p));
    }
  };

  // Enumerate all size-`dim` subsets of constraints.
  std::vector<std::size_t> active(dim);
  const auto recurse = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
    if (depth == dim) {
      consider(active);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      active[depth] = i;
      self(self, i + 1, depth + 1);
    }
  };
  recurse(recurse, 0, 0);

  if (found.empty()) {
    throw std::invalid_argument("polytope: no vertices (empty or degenerate region)");
  }
  vertices_ = std::move(found);
  enumerated_ = true;
  return vertices_;
}

AffineCheck verify_upper_bound(const Polytope& region, const AffineForm& form,
                               const Rational& bound) {
  AffineCheck result;
  bool first = true;
  std::optional<Point> argmax;
  for (const Point& v : region.vertices()) {
    const Rational value = form.eval(v);
    if (first || value > result.max_value) {
      result.max_value = value;
      argmax = v;
      first = false;
    }
  }
  result.holds = result.max_value <= bound;
  if (!result.holds) result.witness = argmax;
  return result;
}

}  // namespace wdp
