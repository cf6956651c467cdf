#include "wdp/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace wdp {

namespace {

void require_nonzero_denominator(const mpz_class& d) {
  if (sgn(d) == 0) throw std::domain_error("division by zero");
}

}  // namespace

Rational::Rational(long n, long d) : v_(n, d == 0 ? 1 : d) {
  if (d == 0) throw std::domain_error("division by zero");
  v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
  require_nonzero_denominator(d);
  v_ = mpq_class(n) / mpq_class(d);
  v_.canonicalize();
}

Rational::Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(const std::string& text) {
  const auto bad = [&] {
    return std::invalid_argument("malformed rational: \"" + text + "\"");
  };
  if (text.empty()) throw bad();
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '-') {
    negative = true;
    ++pos;
  }
  const auto digits = [&](std::size_t start, std::size_t end) {
    if (start == end) throw bad();
    for (std::size_t i = start; i < end; ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw bad();
    }
    return text.substr(start, end - start);
  };
  const std::size_t slash = text.find('/', pos);
  mpz_class num, den;
  if (slash == std::string::npos) {
    num = mpz_class(digits(pos, text.size()));
    den = 1;
  } else {
    num = mpz_class(digits(pos, slash));
    den = mpz_class(digits(slash + 1, text.size()));
  }
  require_nonzero_denominator(den);
  if (negative) num = -num;
  return Rational(num, den);
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::decimal(int digits) const {
  if (digits < 0) throw std::invalid_argument("negative digit count");
  mpz_class scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  mpz_class num = numerator();
  const bool negative = sgn(num) < 0;
  if (negative) num = -num;
  num *= scale;
  const mpz_class den = denominator();
  mpz_class q = num / den;
  const mpz_class r = num % den;
  if (2 * r >= den) ++q;
  const mpz_class whole = q / scale;
  const mpz_class frac = q % scale;
  std::string out = negative && (sgn(q) != 0) ? "-" : "";
  out += whole.get_str();
  if (digits > 0) {
    std::string f = frac.get_str();
    out += "." + std::string(static_cast<std::size_t>(digits) - f.size(), '0') + f;
  }
  return out;
}

Rational abs(const Rational& r) { return r.is_negative() ? -r : r; }
const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace wdp
