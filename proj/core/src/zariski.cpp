#include "wdp/zariski.hpp"

#include <algorithm>
#include <stdexcept>

namespace wdp {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument("zariski: " + msg);
}

}  // namespace

QDivisor QDivisor::anti_canonical(const SurfaceModel& s) {
  // -K = (I/w) C for a proportional generator C of class O(w); with a
  // relation C = sum(C_i) the coefficient I/w spreads over the components.
  QDivisor d;
  const long I = amplitude(s.weights);
  if (!s.relations.empty()) {
    const CurveRelation& rel = s.relations.front();
    const CurveClass& whole = s.curve(rel.lhs);
    if (!whole.hyperplane_degree) fail("relation lhs needs a hyperplane degree");
    const Rational c(I, *whole.hyperplane_degree);
    for (const std::string& label : rel.rhs) d.coeffs[label] = c;
    return d;
  }
  for (const CurveClass& c : s.curves) {
    if (!c.mu) continue;
    d.coeffs[c.label] = Rational(1) / *c.mu;
    return d;
  }
  fail("no basis description for the anticanonical class");
}

Rational QDivisor::coeff(const std::string& label) const {
  const auto it = coeffs.find(label);
  return it == coeffs.end() ? Rational() : it->second;
}

QDivisor& QDivisor::add(const std::string& label, const Rational& value) {
  const Rational next = coeff(label) + value;
  if (next.is_zero()) {
    coeffs.erase(label);
  } else {
    coeffs[label] = next;
  }
  return *this;
}

std::string QDivisor::str() const {
  std::string out;
  for (const auto& [label, c] : coeffs) {
    if (c.is_zero()) continue;
    const Rational mag = abs(c);
    if (out.empty()) {
      out += c.is_negative() ? "-" : "";
    } else {
      out += c.is_negative() ? " - " : " + ";
    }
    if (mag == Rational(1)) {
      out += label;
    } else {
      out += mag.str() + " " + label;
    }
  }
  return out.empty() ? "0" : out;
}

Rational pair_divisors(const IntersectionTable& t, const QDivisor& d1,
                       const QDivisor& d2) {
  Rational total;
  for (const auto& [l1, c1] : d1.coeffs) {
    for (const auto& [l2, c2] : d2.coeffs) {
      total += c1 * c2 * t.pair(l1, l2);
    }
  }
  return total;
}

Rational pair_with_curve(const IntersectionTable& t, const QDivisor& d,
                         const std::string& curve) {
  Rational total;
  for (const auto& [label, c] : d.coeffs) total += c * t.pair(label, curve);
  return total;
}

ZariskiResult zariski(const IntersectionTable& t, const QDivisor& d) {
  ZariskiResult result;
  for (const auto& [label, c] : d.coeffs) {
    if (!t.has_curve(label)) fail("divisor uses unknown curve " + label);
    if (c.is_negative()) return result;  // outside the effective cone
  }
  result.pseudoeffective = true;

  // Grow the negative support until the residual meets every basis curve
  // nonnegatively; on each pass solve N.C_j = 0 on the current support.
  std::vector<std::string> support;
  std::map<std::string, Rational> negative;
  for (;;) {
    QDivisor residual = d;
    for (const auto& [label, c] : negative) residual.add(label, -c);
    bool grew = false;
    for (const std::string& curve : t.basis()) {
      if (std::find(support.begin(), support.end(), curve) != support.end()) continue;
      if (pair_with_curve(t, residual, curve).is_negative()) {
        support.push_back(curve);
        grew = true;
      }
    }
    if (!grew) {
      result.nef_part = residual;
      result.negative_part = negative;
      result.negative_support = support;
      result.volume = pair_divisors(t, residual, residual);
      return result;
    }

    // Solve the square system sum_i x_i (C_i . C_j) = D . C_j over the support.
    const std::size_t k = support.size();
    std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
    std::vector<Rational> rhs(k);
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t i = 0; i < k; ++i) m[j][i] = t.pair(support[i], support[j]);
      rhs[j] = pair_with_curve(t, d, support[j]);
    }
    // Gaussian elimination; the Gram matrix of negative curves is invertible.
    for (std::size_t col = 0; col < k; ++col) {
      std::size_t pivot = col;
      while (pivot < k && m[pivot][col].is_zero()) ++pivot;
      if (pivot == k) fail("singular negative-part system");
      std::swap(m[pivot], m[col]);
      std::swap(rhs[pivot], rhs[col]);
      const Rational inv = Rational(1) / m[col][col];
      for (std::size_t j = col; j < k; ++j) m[col][j] *= inv;
      rhs[col] *= inv;
      for (std::size_t row = 0; row < k; ++row) {
        if (row == col || m[row][col].is_zero()) continue;
        const Rational f = m[row][col];
        for (std::size_t j = col; j < k; ++j) m[row][j] -= f * m[col][j];
        rhs[row] -= f * rhs[col];
      }
    }
    negative.clear();
    for (std::size_t i = 0; i < k; ++i) {
      if (rhs[i].is_negative()) fail("negative part with negative coefficient");
      if (!rhs[i].is_zero()) negative[support[i]] = rhs[i];
    }
  }
}

Rational nef_threshold(const IntersectionTable& t, const QDivisor& d,
                       const std::string& curve) {
  bool bounded = false;
  Rational best;
  for (const std::string& other : t.basis()) {
    const Rational denom = t.pair(curve, other);
    if (!denom.is_positive()) continue;
    const Rational candidate = pair_with_curve(t, d, other) / denom;
    if (!bounded || candidate < best) {
      best = candidate;
      bounded = true;
    }
  }
  if (!bounded) fail("direction has no nef bound");
  if (best.is_negative()) fail("divisor is not nef");
  return best;
}

Rational pe_threshold(const QDivisor& d, const std::string& curve) {
  return d.coeff(curve);
}

Rational volume(const IntersectionTable& t, const QDivisor& d) {
  return zariski(t, d).volume;
}

}  // namespace wdp
