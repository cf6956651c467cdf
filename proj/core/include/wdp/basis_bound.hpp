#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wdp/rational.hpp"
#include "wdp/surface.hpp"
#include "wdp/volume_profile.hpp"
#include "wdp/zariski.hpp"

namespace wdp {

// Expected vanishing order along C of a basis-type divisor for D0:
// s(C) = integral of vol(D0 - x*C) over [0, pe] divided by D0^2.
Rational s_invariant(const VolumeProfile& profile, const Rational& d0_squared);
Rational s_invariant(const IntersectionTable& t, const QDivisor& d0,
                     const std::string& curve);

// Closed form 1/(3*mu) for a curve with C ~ mu * (-K), mu > 0.
Rational proportional_s(const Rational& mu);

// Finite-level counts of the filtration of |k*(-K)| by vanishing order along
// a coordinate section of weight w: rank_i = dim of the degree (k*I - i*w)
// piece. The ladder stops at floor(k*I/w), past which every piece is empty.
struct FiltrationCounts {
  long k = 0;
  long weight = 0;
  long long r0 = 0;
  std::vector<long long> ranks;  // i = 1 .. floor(k*I/w)
  Rational bound;                // sum(ranks) / (k * r0)

  long termination_index() const { return static_cast<long>(ranks.size()); }
};

// Discrete counterpart of s(C) at level k. The curve must be a coordinate
// section (hyperplane_degree equal to one of the weights), since vanishing
// order along it is plain divisibility of monomials.
FiltrationCounts discrete_filtration(const SurfaceModel& s,
                                     const std::string& curve, long k);

// One admissibility row of a certificate: the cap a coefficient is allowed
// to reach must dominate the expected order s(C), otherwise the basis-type
// reduction behind the certificate leaves a gap.
struct DirectionBound {
  std::string curve;
  Rational s_value;
  std::string method;  // "proportional" or "profile"
  std::optional<Rational> cap;
  bool admissible = true;
};

DirectionBound direction_bound(const SurfaceModel& s, const std::string& curve,
                               const std::optional<Rational>& cap);

}  // namespace wdp
