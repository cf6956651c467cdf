#include "wdp/volume_profile.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>

namespace wdp {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw std::invalid_argument("volume_profile: " + what);
}

// Exact Gaussian elimination for the small square support systems.
std::vector<Rational> solve(std::vector<std::vector<Rational>> m,
                            std::vector<Rational> rhs) {
  const std::size_t k = rhs.size();
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    while (pivot < k && m[pivot][col].is_zero()) ++pivot;
    if (pivot == k) fail("singular support system");
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    const Rational inv = Rational(1) / m[col][col];
    for (std::size_t j = col; j < k; ++j) m[col][j] *= inv;
    rhs[col] *= inv;
    for (std::size_t row = 0; row < k; ++row) {
      if (row == col || m[row][col].is_zero()) continue;
      const Rational factor = m[row][col];
      for (std::size_t j = col; j < k; ++j) m[row][j] -= factor * m[col][j];
      rhs[row] -= factor * rhs[col];
    }
  }
  return rhs;
}

// Linear-in-lambda scalar c + s*lambda.
struct Linear {
  Rational c;
  Rational s;

  Rational eval(const Rational& lambda) const { return c + s * lambda; }
};

QuadPoly product(const Linear& a, const Linear& b) {
  return {a.c * b.c, a.c * b.s + a.s * b.c, a.s * b.s};
}

}  // namespace

std::string NegativeCoefficient::str() const {
  std::string out = constant.str();
  if (!slope.is_zero()) {
    if (slope.is_negative()) {
      out += " - " + (-slope).str() + " lambda";
    } else {
      out += " + " + slope.str() + " lambda";
    }
  }
  return out;
}

VolumeProfile volume_profile(const IntersectionTable& t, const QDivisor& d0,
                             const std::string& curve) {
  if (!t.has_curve(curve)) fail("unknown direction curve " + curve);
  for (const std::string& c : t.basis()) {
    if (pair_with_curve(t, d0, c).is_negative()) fail("base divisor is not nef");
  }
  const Rational pe_end = d0.coeff(curve);
  if (!pe_end.is_positive()) {
    fail("direction curve does not appear in the base divisor");
  }

  std::vector<ProfileChamber> chambers;
  std::vector<std::string> support;
  Rational lo(0);
  std::vector<Rational> breaks{lo};
  std::vector<QuadPoly> pieces;

  for (;;) {
    // Negative-part coefficients on this chamber, linear in lambda: with the
    // support S fixed, sum_i x_i (C_i . C_j) = (D0 - lambda*C) . C_j splits
    // into one constant system for the lambda^0 part and one for lambda^1.
    const std::size_t k = support.size();
    std::vector<Linear> coeff(k);
    if (k > 0) {
      std::vector<std::vector<Rational>> gram(k, std::vector<Rational>(k));
      std::vector<Rational> rhs0(k), rhs1(k);
      for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < k; ++i) {
          gram[j][i] = t.pair(support[i], support[j]);
        }
        rhs0[j] = pair_with_curve(t, d0, support[j]);
        rhs1[j] = -t.pair(curve, support[j]);
      }
      const std::vector<Rational> x0 = solve(gram, rhs0);
      const std::vector<Rational> x1 = solve(gram, rhs1);
      for (std::size_t i = 0; i < k; ++i) coeff[i] = {x0[i], x1[i]};
    }

    // Wall where some unsupported basis curve starts pairing negatively with
    // the nef part. A root exactly at pe_end opens no new chamber.
    Rational hi = pe_end;
    std::vector<std::string> entering;
    for (const std::string& c : t.basis()) {
      if (std::find(support.begin(), support.end(), c) != support.end()) continue;
      Linear g{pair_with_curve(t, d0, c), -t.pair(curve, c)};
      for (std::size_t i = 0; i < k; ++i) {
        g.c -= coeff[i].c * t.pair(support[i], c);
        g.s -= coeff[i].s * t.pair(support[i], c);
      }
      if (g.eval(lo).is_negative()) fail("nef part fails against " + c);
      if (!g.s.is_negative()) continue;
      const Rational root = -g.c / g.s;
      if (root <= lo || root >= hi) {
        if (root == hi && hi < pe_end) entering.push_back(c);
        continue;
      }
      hi = root;
      entering.assign(1, c);
    }

    // vol on the chamber: P(lambda)^2 = D(lambda)^2 - sum_i x_i(lambda) *
    // (C_i . D(lambda)).
    QuadPoly piece{pair_divisors(t, d0, d0), -Rational(2) * pair_with_curve(t, d0, curve),
                   t.pair(curve, curve)};
    for (std::size_t i = 0; i < k; ++i) {
      const Linear cd{pair_with_curve(t, d0, support[i]),
                      -t.pair(curve, support[i])};
      const QuadPoly term = product(coeff[i], cd);
      piece.c0 -= term.c0;
      piece.c1 -= term.c1;
      piece.c2 -= term.c2;
      if (coeff[i].eval(lo).is_negative() || coeff[i].eval(hi).is_negative()) {
        fail("negative part coefficient of " + support[i] + " left the cone");
      }
    }

    ProfileChamber chamber;
    chamber.lo = lo;
    chamber.hi = hi;
    chamber.piece = piece;
    for (std::size_t i = 0; i < k; ++i) {
      chamber.negative.push_back({support[i], coeff[i].c, coeff[i].s});
    }
    chambers.push_back(chamber);
    breaks.push_back(hi);
    pieces.push_back(piece);

    if (hi == pe_end) break;
    if (entering.empty()) fail("wall without entering curve");
    for (const std::string& c : entering) support.push_back(c);
    lo = hi;
  }

  PiecewiseQuadratic vol(breaks, pieces);
  if (!vol.end_value().is_zero()) {
    fail("profile does not vanish at the pseudoeffective threshold");
  }
  const Rational nef_end = chambers.front().hi;
  return VolumeProfile{curve, nef_end, pe_end, std::move(vol),
                       std::move(chambers)};
}

}  // namespace wdp
