#pragma once

#include <map>
#include <string>
#include <vector>

#include "wdp/rational.hpp"

namespace wdp {

// Affine form c + sum(coeff_v * v) over named variables. Zero coefficients
// are dropped, so structural equality coincides with equality as functions.
class AffineForm {
 public:
  AffineForm() = default;
  explicit AffineForm(Rational constant) : constant_(std::move(constant)) {}

  static AffineForm variable(const std::string& name,
                             const Rational& coeff = Rational(1));
  // Parses forms like "6/95 - 3/19 a + 8/95 b", "m", "-a + 1/2".
  static AffineForm parse(const std::string& text);

  const Rational& constant() const { return constant_; }
  Rational coeff(const std::string& name) const;
  const std::map<std::string, Rational>& coefficients() const { return coeffs_; }
  std::vector<std::string> variables() const;
  bool is_constant() const { return coeffs_.empty(); }

  // Every variable of the form must be present in `point`.
  Rational eval(const std::map<std::string, Rational>& point) const;

  AffineForm& add_term(const std::string& name, const Rational& coeff);

  AffineForm& operator+=(const AffineForm& o);
  AffineForm& operator-=(const AffineForm& o);
  AffineForm& operator*=(const Rational& s);
  friend AffineForm operator+(AffineForm a, const AffineForm& b) { return a += b; }
  friend AffineForm operator-(AffineForm a, const AffineForm& b) { return a -= b; }
  friend AffineForm operator*(AffineForm a, const Rational& s) { return a *= s; }
  friend AffineForm operator*(const Rational& s, AffineForm a) { return a *= s; }
  AffineForm operator-() const;

  friend bool operator==(const AffineForm& a, const AffineForm& b) {
    return a.constant_ == b.constant_ && a.coeffs_ == b.coeffs_;
  }

  std::string str() const;

 private:
  Rational constant_;
  std::map<std::string, Rational> coeffs_;
};

}  // namespace wdp
