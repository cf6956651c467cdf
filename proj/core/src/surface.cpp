#include "wdp/surface.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace wdp {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument("surface: " + msg);
}

bool is_coordinate_point(const std::array<int, 4>& p, int& index) {
  int nonzero = 0;
  for (int i = 0; i < 4; ++i) {
    if (p[i] != 0) {
      nonzero++;
      index = i;
    }
  }
  return nonzero == 1;
}

// Index of the coordinate eliminated by a defining monomial x_i^e * x_l at
// the coordinate point of x_i, or -1 when no such monomial exists.
int eliminated_coordinate(const std::vector<std::array<int, 4>>& monomials, int i) {
  for (const auto& mono : monomials) {
    int other = -1;
    bool shape_ok = mono[i] >= 1;
    for (int j = 0; j < 4 && shape_ok; ++j) {
      if (j == i || mono[j] == 0) continue;
      if (mono[j] == 1 && other == -1) {
        other = j;
      } else {
        shape_ok = false;
      }
    }
    if (shape_ok && other != -1) return other;
  }
  return -1;
}

bool vertex_on_surface(const std::vector<std::array<int, 4>>& monomials, int i) {
  // The coordinate point of x_i lies on the surface iff no defining monomial
  // is a pure power of x_i.
  for (const auto& mono : monomials) {
    bool pure = mono[i] > 0;
    for (int j = 0; j < 4 && pure; ++j) {
      if (j != i && mono[j] != 0) pure = false;
    }
    if (pure) return false;
  }
  return true;
}

}  // namespace

IntersectionTable::IntersectionTable(
    std::vector<std::string> basis, std::map<std::string, Rational> antik,
    std::map<std::string, std::map<std::string, Rational>> pairs)
    : basis_(std::move(basis)), antik_(std::move(antik)), pairs_(std::move(pairs)) {
  for (const std::string& c1 : basis_) {
    if (!antik_.count(c1)) fail("table missing anticanonical degree for " + c1);
    for (const std::string& c2 : basis_) {
      if (!pairs_.count(c1) || !pairs_.at(c1).count(c2)) {
        fail("table missing pairing " + c1 + "." + c2);
      }
      if (pairs_.at(c1).at(c2) != pairs_.at(c2).at(c1)) {
        fail("table not symmetric at " + c1 + "." + c2);
      }
    }
  }
}

bool IntersectionTable::has_curve(const std::string& label) const {
  return std::find(basis_.begin(), basis_.end(), label) != basis_.end();
}

const Rational& IntersectionTable::pair(const std::string& c1,
                                        const std::string& c2) const {
  const auto row = pairs_.find(c1);
  if (row == pairs_.end()) fail("unknown table curve " + c1);
  const auto cell = row->second.find(c2);
  if (cell == row->second.end()) fail("unknown table curve " + c2);
  return cell->second;
}

const Rational& IntersectionTable::antik(const std::string& c) const {
  const auto it = antik_.find(c);
  if (it == antik_.end()) fail("unknown table curve " + c);
  return it->second;
}

const QuotientSingularity& SurfaceModel::singularity(const std::string& label) const {
  for (const auto& s : singularities) {
    if (s.label == label) return s;
  }
  fail("unknown singularity " + label);
}

const CurveClass& SurfaceModel::curve(const std::string& label) const {
  for (const auto& c : curves) {
    if (c.label == label) return c;
  }
  fail("unknown curve " + label);
}

bool SurfaceModel::has_singularity(const std::string& label) const {
  for (const auto& s : singularities) {
    if (s.label == label) return true;
  }
  return false;
}

bool SurfaceModel::has_curve(const std::string& label) const {
  for (const auto& c : curves) {
    if (c.label == label) return true;
  }
  return false;
}

std::vector<std::string> SurfaceModel::basis_curves() const {
  if (!relations.empty()) return relations.front().rhs;
  std::vector<std::string> out;
  for (const auto& c : curves) {
    if (c.mu) out.push_back(c.label);
  }
  return out;
}

Rational ambient_pairing(const Quintuple& q, long m1, long m2) {
  validate(q);
  Rational num(m1);
  num *= Rational(m2);
  num *= Rational(q.d);
  Rational den(q.w[0]);
  den *= Rational(q.w[1]);
  den *= Rational(q.w[2]);
  den *= Rational(q.w[3]);
  return num / den;
}

Rational coordinate_restriction_degree(const Quintuple& q, int i, int j, long m) {
  if (i < 0 || j < 0 || i >= 4 || j >= 4 || i == j) {
    fail("bad coordinate pair");
  }
  // {x_i = x_j = 0} is the coordinate line spanned by the other two
  // variables, so O(m) restricts with degree m over their weight product.
  Rational den(1);
  for (int k = 0; k < 4; ++k) {
    if (k != i && k != j) den *= Rational(q.w[k]);
  }
  return Rational(m) / den;
}

Rational curve_antik_degree(const SurfaceModel& s, const CurveClass& c) {
  const long I = amplitude(s.weights);
  if (c.hyperplane_degree) {
    return ambient_pairing(s.weights, *c.hyperplane_degree, I);
  }
  if (c.coordinate_pair) {
    return coordinate_restriction_degree(s.weights, c.coordinate_pair->first,
                                         c.coordinate_pair->second, I);
  }
  // Residual component: resolve through the relation that defines it.
  for (const auto& rel : s.relations) {
    if (std::find(rel.rhs.begin(), rel.rhs.end(), c.label) == rel.rhs.end()) continue;
    Rational value = curve_antik_degree(s, s.curve(rel.lhs));
    for (const std::string& other : rel.rhs) {
      if (other == c.label) continue;
      value -= curve_antik_degree(s, s.curve(other));
    }
    return value;
  }
  fail("curve " + c.label + " has no class description and no relation");
}

Rational selfint_by_adjunction(const SurfaceModel& s, const CurveClass& c) {
  if (!c.coordinate_pair) fail("adjunction needs a coordinate-pair curve");
  if (!c.singular_at.empty()) {
    fail("adjunction not applicable: " + c.label + " has singular points");
  }
  // deg(K_S + C)|_C = -2 + sum (1 - 1/n) over the quotient points of C.
  Rational value = Rational(-2) + curve_antik_degree(s, c);
  for (const std::string& label : c.plt_points) {
    const auto& sing = s.singularity(label);
    value += Rational(1) - Rational(1, sing.n);
  }
  return value;
}

IntersectionTable complete_table(const SurfaceModel& s) {
  const std::vector<std::string> basis = s.basis_curves();
  std::map<std::string, Rational> antik;
  std::map<std::string, std::map<std::string, Rational>> pairs;

  if (basis.size() == 1) {
    const CurveClass& c = s.curve(basis[0]);
    if (!c.hyperplane_degree) fail("basis curve needs a hyperplane degree");
    const long w = *c.hyperplane_degree;
    antik[c.label] = ambient_pairing(s.weights, w, amplitude(s.weights));
    pairs[c.label][c.label] = ambient_pairing(s.weights, w, w);
    return IntersectionTable(basis, std::move(antik), std::move(pairs));
  }

  if (basis.size() != 2 || s.relations.empty()) {
    fail("table construction expects one proportional curve or a two-curve relation");
  }
  const CurveRelation& rel = s.relations.front();
  // The axis component carries the adjunction data; the residual component
  // inherits everything else through the relation.
  const CurveClass* axis = nullptr;
  const CurveClass* residual = nullptr;
  for (const std::string& label : rel.rhs) {
    const CurveClass& c = s.curve(label);
    if (c.coordinate_pair) {
      axis = &c;
    } else {
      residual = &c;
    }
  }
  if (!axis || !residual) fail("relation needs one axis and one residual curve");
  const CurveClass& whole = s.curve(rel.lhs);
  if (!whole.hyperplane_degree) fail("relation lhs needs a hyperplane degree");
  const long w = *whole.hyperplane_degree;
  const long I = amplitude(s.weights);
  const auto [pi, pj] = *axis->coordinate_pair;

  const Rational axis_self = selfint_by_adjunction(s, *axis);
  const Rational whole_axis = coordinate_restriction_degree(s.weights, pi, pj, w);
  const Rational whole_self = ambient_pairing(s.weights, w, w);
  const Rational cross = whole_axis - axis_self;
  const Rational residual_self = (whole_self - whole_axis) - cross;

  antik[axis->label] = coordinate_restriction_degree(s.weights, pi, pj, I);
  antik[residual->label] = ambient_pairing(s.weights, w, I) - antik[axis->label];
  pairs[axis->label][axis->label] = axis_self;
  pairs[axis->label][residual->label] = cross;
  pairs[residual->label][axis->label] = cross;
  pairs[residual->label][residual->label] = residual_self;
  return IntersectionTable({axis->label, residual->label}, std::move(antik),
                           std::move(pairs));
}

bool types_equivalent(long n, long a1, long b1, long a2, long b2) {
  const auto norm = [&](long v) { return ((v % n) + n) % n; };
  a1 = norm(a1); b1 = norm(b1); a2 = norm(a2); b2 = norm(b2);
  for (long u = 1; u < n; ++u) {
    if (std::gcd(u, n) != 1) continue;
    const long ua = norm(u * a1);
    const long ub = norm(u * b1);
    if ((ua == a2 && ub == b2) || (ua == b2 && ub == a2)) return true;
  }
  return n == 1;
}

void SurfaceModel::validate() const {
  wdp::validate(weights);
  if (name.empty()) fail("missing name");
  if (!is_well_formed(weights)) fail("weight system is not well formed");
  if (amplitude(weights) <= 0) fail("non-Fano weight system");
  if (!alpha.is_positive()) fail("alpha must be positive");
  if (monomials.empty()) fail("no defining monomials");
  for (const auto& mono : monomials) {
    long deg = 0;
    for (int i = 0; i < 4; ++i) {
      if (mono[i] < 0) fail("negative exponent in defining monomial");
      deg += mono[i] * weights.w[i];
    }
    if (deg != weights.d) fail("defining monomial has wrong degree");
  }

  std::set<std::string> sing_labels;
  for (const auto& sing : singularities) {
    if (!sing_labels.insert(sing.label).second) {
      fail("duplicate singularity label " + sing.label);
    }
    if (sing.n < 2) fail("quotient order must be at least 2");
    if (sing.a < 1 || sing.a >= sing.n || sing.b < 1 || sing.b >= sing.n) {
      fail("quotient type out of range at " + sing.label);
    }
    if (std::gcd(sing.a, sing.n) != 1 || std::gcd(sing.b, sing.n) != 1) {
      fail("quotient type not isolated at " + sing.label);
    }
  }

  // Coordinate-point bookkeeping: declared singularities must sit on the
  // surface with the order and transversal type the weight system forces,
  // and no singular coordinate point may be left undeclared.
  std::array<const QuotientSingularity*, 4> at_vertex{};
  for (const auto& sing : singularities) {
    int index = -1;
    if (!is_coordinate_point(sing.point, index)) continue;
    if (at_vertex[index]) fail("two singularities at one coordinate point");
    at_vertex[index] = &sing;
  }
  for (int i = 0; i < 4; ++i) {
    const bool on_surface = vertex_on_surface(monomials, i);
    const long wi = weights.w[i];
    if (const QuotientSingularity* sing = at_vertex[i]) {
      if (!on_surface) fail("declared singularity off the surface: " + sing->label);
      if (wi < 2) fail("coordinate point of weight 1 cannot be singular");
      if (sing->n != wi) fail("quotient order mismatch at " + sing->label);
      const int l = eliminated_coordinate(monomials, i);
      if (l < 0) fail("cannot derive transversal type at " + sing->label);
      long tw[2];
      int k = 0;
      for (int j = 0; j < 4; ++j) {
        if (j != i && j != l) tw[k++] = weights.w[j] % wi;
      }
      if (!types_equivalent(wi, tw[0], tw[1], sing->a, sing->b)) {
        fail("transversal type mismatch at " + sing->label);
      }
    } else if (on_surface && wi >= 2) {
      fail("undeclared singular coordinate point of weight " + std::to_string(wi));
    }
  }

  std::set<std::string> curve_labels;
  for (const auto& c : curves) {
    if (!curve_labels.insert(c.label).second) {
      fail("duplicate curve label " + c.label);
    }
    if (c.hyperplane_degree && c.coordinate_pair) {
      fail("curve " + c.label + " has two class descriptions");
    }
    if (c.hyperplane_degree && *c.hyperplane_degree < 1) {
      fail("nonpositive hyperplane degree on " + c.label);
    }
    if (c.coordinate_pair) {
      const auto [i, j] = *c.coordinate_pair;
      if (i < 0 || j < 0 || i >= 4 || j >= 4 || i >= j) {
        fail("bad coordinate pair on " + c.label);
      }
      for (const auto& m : monomials) {
        if (m[i] == 0 && m[j] == 0) {
          fail("curve " + c.label + " does not lie on the surface");
        }
      }
    }
    for (const auto& label : c.plt_points) {
      if (!has_singularity(label)) fail("unknown plt point " + label);
    }
    for (const auto& label : c.singular_at) {
      if (!has_singularity(label)) fail("unknown singular point " + label);
    }
    if (c.mu) {
      if (!c.hyperplane_degree) fail("mu requires a hyperplane curve");
      if (Rational(*c.hyperplane_degree) != *c.mu * Rational(amplitude(weights))) {
        fail("mu inconsistent with the class of " + c.label);
      }
    }
  }

  for (const auto& rel : relations) {
    if (!has_curve(rel.lhs)) fail("relation lhs unknown: " + rel.lhs);
    if (rel.rhs.size() < 2) fail("relation needs at least two components");
    std::set<std::string> seen;
    for (const auto& label : rel.rhs) {
      if (!has_curve(label)) fail("relation rhs unknown: " + label);
      if (label == rel.lhs) fail("relation lhs repeated on rhs");
      if (!seen.insert(label).second) fail("relation rhs repeated: " + label);
    }
  }

  if (basis_curves().empty()) fail("no basis curves (relation or mu required)");
}

}  // namespace wdp
