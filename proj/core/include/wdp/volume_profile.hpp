#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wdp/piecewise.hpp"
#include "wdp/quad_poly.hpp"
#include "wdp/rational.hpp"
#include "wdp/surface.hpp"
#include "wdp/zariski.hpp"

namespace wdp {

// Coefficient of one support curve in the negative part of D0 - lambda*C,
// written as constant + slope * lambda. On the chamber [lo, hi] the support
// is fixed and every coefficient is linear in lambda.
struct NegativeCoefficient {
  std::string curve;
  Rational constant;
  Rational slope;

  Rational eval(const Rational& lambda) const {
    return constant + slope * lambda;
  }
  std::string str() const;
};

struct ProfileChamber {
  Rational lo;
  Rational hi;
  QuadPoly piece;  // vol(D0 - lambda*C) restricted to [lo, hi]
  std::vector<NegativeCoefficient> negative;
};

// The function lambda -> vol(D0 - lambda*C) on [0, pe_end], assembled from
// the chamber structure of the Zariski decomposition. The profile vanishes
// at pe_end and is nef (empty negative part) exactly on [0, nef_end].
struct VolumeProfile {
  std::string direction;
  Rational nef_end;
  Rational pe_end;
  PiecewiseQuadratic volume;
  std::vector<ProfileChamber> chambers;

  Rational total_integral() const { return volume.integrate(); }
};

// Walks the chambers exactly. D0 must be nef and must contain `curve` with a
// positive coefficient, so that the pseudoeffective threshold is finite.
VolumeProfile volume_profile(const IntersectionTable& t, const QDivisor& d0,
                             const std::string& curve);

}  // namespace wdp
