#include "wdp/affine.hpp"

#include <cctype>
#include <stdexcept>

namespace wdp {

namespace {

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c) {
  return ident_start(c) || std::isdigit(static_cast<unsigned char>(c));
}

void append_term(std::string& out, const Rational& coeff, const std::string& sym) {
  if (coeff.is_zero()) return;
  const Rational mag = abs(coeff);
  if (out.empty()) {
    out += coeff.is_negative() ? "-" : "";
  } else {
    out += coeff.is_negative() ? " - " : " + ";
  }
  if (sym.empty()) {
    out += mag.str();
  } else if (mag == Rational(1)) {
    out += sym;
  } else {
    out += mag.str() + " " + sym;
  }
}

}  // namespace

AffineForm AffineForm::variable(const std::string& name, const Rational& coeff) {
  AffineForm f;
  f.add_term(name, coeff);
  return f;
}

Rational AffineForm::coeff(const std::string& name) const {
  const auto it = coeffs_.find(name);
  return it == coeffs_.end() ? Rational() : it->second;
}

std::vector<std::string> AffineForm::variables() const {
  std::vector<std::string> names;
  names.reserve(coeffs_.size());
  for (const auto& [name, c] : coeffs_) names.push_back(name);
  return names;
}

Rational AffineForm::eval(const std::map<std::string, Rational>& point) const {
  Rational value = constant_;
  for (const auto& [name, c] : coeffs_) {
    const auto it = point.find(name);
    if (it == point.end()) {
      throw std::invalid_argument("affine eval: missing variable " + name);
    }
    value += c * it->second;
  }
  return value;
}

AffineForm& AffineForm::add_term(const std::string& name, const Rational& coeff) {
  const Rational next = this->coeff(name) + coeff;
  if (next.is_zero()) {
    coeffs_.erase(name);
  } else {
    coeffs_[name] = next;
  }
  return *this;
}

AffineForm& AffineForm::operator+=(const AffineForm& o) {
  constant_ += o.constant_;
  for (const auto& [name, c] : o.coeffs_) add_term(name, c);
  return *this;
}

AffineForm& AffineForm::operator-=(const AffineForm& o) {
  constant_ -= o.constant_;
  for (const auto& [name, c] : o.coeffs_) add_term(name, -c);
  return *this;
}

AffineForm& AffineForm::operator*=(const Rational& s) {
  if (s.is_zero()) {
    constant_ = Rational();
    coeffs_.clear();
    return *this;
  }
  constant_ *= s;
  for (auto& [name, c] : coeffs_) c *= s;
  return *this;
}

AffineForm AffineForm::operator-() const {
  AffineForm out = *this;
  out *= Rational(-1);
  return out;
}

AffineForm AffineForm::parse(const std::string& text) {
  const auto bad = [&] {
    return std::invalid_argument("malformed affine form: \"" + text + "\"");
  };
  AffineForm out;
  std::size_t pos = 0;
  const auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  if (pos == text.size()) throw bad();
  bool first = true;
  while (pos < text.size()) {
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_space();
    } else if (!first) {
      throw bad();
    }
    first = false;
    if (pos >= text.size()) throw bad();
    Rational coeff(1);
    bool have_number = false;
    if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
      const std::size_t start = pos;
      while (pos < text.size() &&
             (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) {
        ++pos;
      }
      coeff = Rational::parse(text.substr(start, pos - start));
      have_number = true;
      skip_space();
    }
    std::string name;
    if (pos < text.size() && ident_start(text[pos])) {
      const std::size_t start = pos;
      while (pos < text.size() && ident_char(text[pos])) ++pos;
      name = text.substr(start, pos - start);
    }
    if (!have_number && name.empty()) throw bad();
    const Rational value = sign < 0 ? -coeff : coeff;
    if (name.empty()) {
      out.constant_ += value;
    } else {
      out.add_term(name, value);
    }
    skip_space();
  }
  return out;
}

std::string AffineForm::str() const {
  std::string out;
  append_term(out, constant_, "");
  for (const auto& [name, c] : coeffs_) append_term(out, c, name);
  return out.empty() ? "0" : out;
}

}  // namespace wdp
