#pragma once

#include <array>
#include <vector>

#include "wdp/rational.hpp"

namespace wdp {

// Quotient type 1/n(a, b), detached from any particular surface point.
struct SingularityType {
  long n = 1;
  long a = 1;
  long b = 1;

  friend bool operator==(const SingularityType&, const SingularityType&) = default;
};

// Unit-scaled representative with the lexicographically smallest sorted
// weight pair; 1/5(2,2) normalizes to 1/5(1,1).
SingularityType normalize_type(const SingularityType& t);

// Numerical data of the weighted blow-up of 1/n(a, b) with weights (a, b):
// discrepancy (a + b - n)/n, exceptional self-intersection -n/(a*b), and the
// quotient points 1/a(n, -b), 1/b(-a, n) on the exceptional curve (types of
// order 1 dropped, the rest normalized).
struct BlowupChart {
  SingularityType center;
  Rational discrepancy;
  Rational exceptional_self;
  std::vector<SingularityType> exceptional_singularities;
};

BlowupChart blowup_chart(const SingularityType& t);

// Multiplicity along the exceptional divisor of the proper transform of a
// curve germ: min over the germ monomials u^e0 v^e1 of (e0*a + e1*b) / n,
// where (u, v) are the orbifold chart coordinates of weights (a, b).
Rational transform_coefficient(const std::vector<std::array<long, 2>>& germ,
                               const SingularityType& t);

// Log canonical threshold of a quasi-homogeneous curve germ of weighted
// degree delta with respect to coordinate weights (w1, w2):
// min(1, (w1 + w2)/delta).
Rational lct_germ(long w1, long w2, long delta);

}  // namespace wdp
