#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wdp/affine.hpp"
#include "wdp/rational.hpp"

namespace wdp {

using Point = std::map<std::string, Rational>;

// Closed convex polytope {x : g(x) >= 0 for every constraint g} in up to
// three named variables. Intended for the small cap regions that bound the
// boundary coefficients of a log pair, so the vertex enumeration is a plain
// exact scan over constraint subsets.
class Polytope {
 public:
  Polytope(std::vector<std::string> variables, std::vector<AffineForm> nonneg);

  const std::vector<std::string>& variables() const { return vars_; }
  const std::vector<AffineForm>& constraints() const { return constraints_; }

  bool contains(const Point& p) const;

  // All vertices (basic feasible intersections), deduplicated. Throws if the
  // system admits no vertex or fails the axis boundedness screen, since an
  // unbounded region would invalidate vertex-based bound checks.
  const std::vector<Point>& vertices() const;

 private:
  std::vector<std::string> vars_;
  std::vector<AffineForm> constraints_;
  mutable std::vector<Point> vertices_;
  mutable bool enumerated_ = false;
};

// Result of checking `form <= bound` over a polytope. When the check fails,
// `witness` is a vertex attaining a value above the bound.
struct AffineCheck {
  bool holds = false;
  Rational max_value;
  std::optional<Point> witness;
};

AffineCheck verify_upper_bound(const Polytope& region, const AffineForm& form,
                               const Rational& bound);

}  // namespace wdp
