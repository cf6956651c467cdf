#pragma once

#include <map>
#include <string>
#include <vector>

#include "wdp/rational.hpp"
#include "wdp/surface.hpp"

namespace wdp {

// Q-divisor written in the basis curves of an intersection table.
struct QDivisor {
  std::map<std::string, Rational> coeffs;

  static QDivisor anti_canonical(const SurfaceModel& s);

  Rational coeff(const std::string& label) const;
  QDivisor& add(const std::string& label, const Rational& value);

  friend bool operator==(const QDivisor&, const QDivisor&) = default;
  std::string str() const;
};

Rational pair_divisors(const IntersectionTable& t, const QDivisor& d1,
                       const QDivisor& d2);
Rational pair_with_curve(const IntersectionTable& t, const QDivisor& d,
                         const std::string& curve);

// Zariski decomposition D = P + N over the negative-cone basis. P is nef
// (P.C >= 0 against every basis curve), N is supported on curves with
// P.C = 0, and the Gram matrix of the support is negative definite.
struct ZariskiResult {
  bool pseudoeffective = false;
  QDivisor nef_part;
  std::map<std::string, Rational> negative_part;
  std::vector<std::string> negative_support;
  Rational volume;  // N/A when not pseudoeffective (kept at 0)
};

ZariskiResult zariski(const IntersectionTable& t, const QDivisor& d);

// Largest s with D - s*C nef; requires D nef.
Rational nef_threshold(const IntersectionTable& t, const QDivisor& d,
                       const std::string& curve);

// Largest s with D - s*C pseudoeffective: the coefficient of C in D, since
// the effective cone is spanned by the basis curves.
Rational pe_threshold(const QDivisor& d, const std::string& curve);

Rational volume(const IntersectionTable& t, const QDivisor& d);

}  // namespace wdp
