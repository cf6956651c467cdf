#include "wdp/quad_poly.hpp"

namespace wdp {

namespace {

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

std::string QuadPoly::str(const std::string& var) const {
  std::string out;
  append_term(out, c0, "");
  append_term(out, c1, var);
  append_term(out, c2, var + "^2");
  return out.empty() ? "0" : out;
}

}  // namespace wdp
