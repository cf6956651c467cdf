#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wdp/rational.hpp"
#include "wdp/weights.hpp"

namespace wdp {

// Cyclic quotient singularity of type 1/n(a, b) at a marked point of the
// surface. For coordinate points the transversal type is recomputed from the
// weight system and checked against the declared one up to unit scaling.
struct QuotientSingularity {
  std::string label;
  long n = 1;
  long a = 1;
  long b = 1;
  std::array<int, 4> point{};
};

// Curve class on the surface. Exactly one of the class descriptions applies:
//  * hyperplane_degree w: the divisor cut by a weight-w coordinate, so
//    numerically O(w) restricted to the surface;
//  * coordinate_pair (i, j): the coordinate line {x_i = x_j = 0}, a copy of
//    the P of the two remaining weights, paired with O(m) as m over their
//    product;
//  * neither: a residual component defined through a curve relation.
// plt_points lists quotient points the curve passes through smoothly;
// singular_at lists quotient points where the curve itself is singular
// (adjunction is never applied across those). mu marks proportionality
// C ~ mu * (-K) when the curve generates the effective cone direction used
// by the one-curve volume path.
struct CurveClass {
  std::string label;
  std::optional<long> hyperplane_degree;
  std::optional<std::pair<int, int>> coordinate_pair;
  std::vector<std::string> plt_points;
  std::vector<std::string> singular_at;
  std::optional<Rational> mu;
};

// Linear equivalence lhs = sum(rhs) among curve classes.
struct CurveRelation {
  std::string lhs;
  std::vector<std::string> rhs;
};

// Exact intersection numbers on the span of the negative-cone basis curves,
// together with each basis curve's anticanonical degree.
class IntersectionTable {
 public:
  IntersectionTable(std::vector<std::string> basis,
                    std::map<std::string, Rational> antik,
                    std::map<std::string, std::map<std::string, Rational>> pairs);

  const std::vector<std::string>& basis() const { return basis_; }
  bool has_curve(const std::string& label) const;
  const Rational& pair(const std::string& c1, const std::string& c2) const;
  const Rational& antik(const std::string& c) const;

 private:
  std::vector<std::string> basis_;
  std::map<std::string, Rational> antik_;
  std::map<std::string, std::map<std::string, Rational>> pairs_;
};

struct SurfaceModel {
  std::string name;
  Quintuple weights;
  Rational alpha;  // global log canonical threshold, carried as input data
  std::vector<std::array<int, 4>> monomials;
  std::vector<QuotientSingularity> singularities;
  std::vector<CurveClass> curves;
  std::vector<CurveRelation> relations;

  const QuotientSingularity& singularity(const std::string& label) const;
  const CurveClass& curve(const std::string& label) const;
  bool has_singularity(const std::string& label) const;
  bool has_curve(const std::string& label) const;

  // Basis of the curve span used by the positivity routines: the right-hand
  // side of the declared relation when present, otherwise the proportional
  // generator(s).
  std::vector<std::string> basis_curves() const;

  // Structural and numerical consistency; throws on the first violation.
  void validate() const;
};

// Intersection of the classes O(m1) and O(m2) on the hypersurface:
// m1 * m2 * d / (w0*w1*w2*w3).
Rational ambient_pairing(const Quintuple& q, long m1, long m2);

// Degree of O(m) restricted to the coordinate line {x_i = x_j = 0}:
// m over the product of the two remaining weights.
Rational coordinate_restriction_degree(const Quintuple& q, int i, int j, long m);

// Anticanonical degree -K.C of a curve whose class description is explicit.
Rational curve_antik_degree(const SurfaceModel& s, const CurveClass& c);

// Self-intersection of a coordinate-pair curve via orbifold adjunction:
// C^2 = -2 - K.C + sum (n_P - 1)/n_P over its plt quotient points.
Rational selfint_by_adjunction(const SurfaceModel& s, const CurveClass& c);

// Builds the full exact table on the basis curves, propagating the declared
// relation and adjunction. The result satisfies the relation linearly.
IntersectionTable complete_table(const SurfaceModel& s);

// Checks whether two quotient types 1/n(a,b) agree up to unit scaling and
// coordinate swap.
bool types_equivalent(long n, long a1, long b1, long a2, long b2);

}  // namespace wdp
