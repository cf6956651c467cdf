#include "wdp/surface_io.hpp"

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace wdp {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw std::invalid_argument("surface_io: line " + std::to_string(line) +
                              ": " + what);
}

struct Value {
  enum class Kind { kInt, kString, kArray };
  Kind kind = Kind::kInt;
  long long integer = 0;
  std::string text;
  std::vector<Value> items;
};

struct Entry {
  std::string key;
  Value value;
  int line = 0;
};

struct Table {
  std::string name;
  bool is_list = false;
  int line = 0;
  std::vector<Entry> entries;
};

class ValueParser {
 public:
  ValueParser(std::string text, int line) : text_(std::move(text)), line_(line) {}

  Value parse() {
    const Value v = parse_value();
    skip_space();
    if (pos_ != text_.size()) fail(line_, "trailing characters after value");
    return v;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  char peek() {
    skip_space();
    if (pos_ >= text_.size()) fail(line_, "unexpected end of value");
    return text_[pos_];
  }

  Value parse_value() {
    const char c = peek();
    if (c == '[') return parse_array();
    if (c == '"') return parse_string();
    return parse_integer();
  }

  Value parse_array() {
    ++pos_;  // consume '['
    Value v;
    v.kind = Value::Kind::kArray;
    if (peek() == ']') {
      ++pos_;
      return v;
    }
    for (;;) {
      v.items.push_back(parse_value());
      const char c = peek();
      ++pos_;
      if (c == ']') return v;
      if (c != ',') fail(line_, "expected ',' or ']' in array");
    }
  }

  Value parse_string() {
    ++pos_;  // consume '"'
    Value v;
    v.kind = Value::Kind::kString;
    while (pos_ < text_.size() && text_[pos_] != '"') v.text += text_[pos_++];
    if (pos_ >= text_.size()) fail(line_, "unterminated string");
    ++pos_;
    return v;
  }

  Value parse_integer() {
    std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    const std::string token = text_.substr(start, pos_ - start);
    if (token.empty() || token == "-") fail(line_, "expected a value");
    Value v;
    v.integer = std::stoll(token);
    return v;
  }

  std::string text_;
  int line_;
  std::size_t pos_ = 0;
};

std::string strip_comment(const std::string& line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<Table> parse_document(const std::string& text) {
  std::vector<Table> tables;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    const std::string raw =
        text.substr(pos, eol == std::string::npos ? std::string::npos : eol - pos);
    pos = eol == std::string::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    const std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;
    if (line.front() == '[') {
      const bool is_list = line.size() > 1 && line[1] == '[';
      const std::string closer = is_list ? "]]" : "]";
      if (line.size() < 2 * closer.size() + 1 ||
          line.substr(line.size() - closer.size()) != closer) {
        fail(line_no, "malformed section header");
      }
      const std::string name = trim(line.substr(
          closer.size(), line.size() - 2 * closer.size()));
      if (name.empty()) fail(line_no, "empty section name");
      tables.push_back({name, is_list, line_no, {}});
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) fail(line_no, "expected key = value");
    if (tables.empty()) fail(line_no, "key outside any section");
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) fail(line_no, "empty key");
    ValueParser vp(line.substr(eq + 1), line_no);
    tables.back().entries.push_back({key, vp.parse(), line_no});
  }
  return tables;
}

long require_int(const Entry& e) {
  if (e.value.kind != Value::Kind::kInt) fail(e.line, e.key + " must be an integer");
  return static_cast<long>(e.value.integer);
}

const std::string& require_string(const Entry& e) {
  if (e.value.kind != Value::Kind::kString) {
    fail(e.line, e.key + " must be a quoted string");
  }
  return e.value.text;
}

Rational require_rational(const Entry& e) {
  try {
    return Rational::parse(require_string(e));
  } catch (const std::exception&) {
    fail(e.line, e.key + " is not a rational");
  }
}

std::vector<long> require_ints(const Entry& e) {
  if (e.value.kind != Value::Kind::kArray) fail(e.line, e.key + " must be an array");
  std::vector<long> out;
  for (const Value& item : e.value.items) {
    if (item.kind != Value::Kind::kInt) fail(e.line, e.key + " must hold integers");
    out.push_back(static_cast<long>(item.integer));
  }
  return out;
}

std::vector<std::string> require_strings(const Entry& e) {
  if (e.value.kind != Value::Kind::kArray) fail(e.line, e.key + " must be an array");
  std::vector<std::string> out;
  for (const Value& item : e.value.items) {
    if (item.kind != Value::Kind::kString) fail(e.line, e.key + " must hold strings");
    out.push_back(item.text);
  }
  return out;
}

std::vector<std::vector<long>> require_int_rows(const Entry& e, std::size_t width) {
  if (e.value.kind != Value::Kind::kArray) fail(e.line, e.key + " must be an array");
  std::vector<std::vector<long>> out;
  for (const Value& row : e.value.items) {
    if (row.kind != Value::Kind::kArray || row.items.size() != width) {
      fail(e.line, e.key + " must hold arrays of length " + std::to_string(width));
    }
    std::vector<long> r;
    for (const Value& item : row.items) {
      if (item.kind != Value::Kind::kInt) fail(e.line, e.key + " must hold integers");
      r.push_back(static_cast<long>(item.integer));
    }
    out.push_back(r);
  }
  return out;
}

[[noreturn]] void unknown_key(const Entry& e, const std::string& section) {
  fail(e.line, "unknown key '" + e.key + "' in [" + section + "]");
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

std::string int_array(const std::vector<long>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(v[i]);
  }
  return out + "]";
}

std::string string_array(const std::vector<std::string>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += quoted(v[i]);
  }
  return out + "]";
}

}  // namespace

SurfaceModel parse_surface(const std::string& text) {
  SurfaceModel s;
  bool saw_surface = false;
  for (const Table& table : parse_document(text)) {
    if (table.name == "surface" && !table.is_list) {
      if (saw_surface) fail(table.line, "duplicate [surface] section");
      saw_surface = true;
      for (const Entry& e : table.entries) {
        if (e.key == "name") {
          s.name = require_string(e);
        } else if (e.key == "weights") {
          const std::vector<long> w = require_ints(e);
          if (w.size() != 4) fail(e.line, "weights must have four entries");
          for (int i = 0; i < 4; ++i) s.weights.w[i] = w[i];
        } else if (e.key == "degree") {
          s.weights.d = require_int(e);
        } else if (e.key == "alpha") {
          s.alpha = require_rational(e);
        } else if (e.key == "monomials") {
          for (const std::vector<long>& row : require_int_rows(e, 4)) {
            std::array<int, 4> m{};
            for (int i = 0; i < 4; ++i) m[i] = static_cast<int>(row[i]);
            s.monomials.push_back(m);
          }
        } else {
          unknown_key(e, "surface");
        }
      }
    } else if (table.name == "singularity" && table.is_list) {
      QuotientSingularity q;
      for (const Entry& e : table.entries) {
        if (e.key == "label") {
          q.label = require_string(e);
        } else if (e.key == "point") {
          const std::vector<long> p = require_ints(e);
          if (p.size() != 4) fail(e.line, "point must have four entries");
          for (int i = 0; i < 4; ++i) q.point[i] = static_cast<int>(p[i]);
        } else if (e.key == "type") {
          const std::vector<long> t = require_ints(e);
          if (t.size() != 3) fail(e.line, "type must be [n, a, b]");
          q.n = t[0];
          q.a = t[1];
          q.b = t[2];
        } else {
          unknown_key(e, "singularity");
        }
      }
      s.singularities.push_back(q);
    } else if (table.name == "curve" && table.is_list) {
      CurveClass c;
      for (const Entry& e : table.entries) {
        if (e.key == "label") {
          c.label = require_string(e);
        } else if (e.key == "hyperplane") {
          c.hyperplane_degree = require_int(e);
        } else if (e.key == "pair") {
          const std::vector<long> p = require_ints(e);
          if (p.size() != 2) fail(e.line, "pair must have two entries");
          c.coordinate_pair = {static_cast<int>(p[0]), static_cast<int>(p[1])};
        } else if (e.key == "plt") {
          c.plt_points = require_strings(e);
        } else if (e.key == "singular") {
          c.singular_at = require_strings(e);
        } else if (e.key == "mu") {
          c.mu = require_rational(e);
        } else {
          unknown_key(e, "curve");
        }
      }
      s.curves.push_back(c);
    } else if (table.name == "relation" && table.is_list) {
      CurveRelation r;
      for (const Entry& e : table.entries) {
        if (e.key == "whole") {
          r.lhs = require_string(e);
        } else if (e.key == "parts") {
          r.rhs = require_strings(e);
        } else {
          unknown_key(e, "relation");
        }
      }
      s.relations.push_back(r);
    } else {
      fail(table.line, "unknown section [" + table.name + "]");
    }
  }
  if (!saw_surface) throw std::invalid_argument("surface_io: missing [surface] section");
  return s;
}

CertificateScript parse_certificate(const std::string& text) {
  CertificateScript c;
  bool saw_head = false;
  for (const Table& table : parse_document(text)) {
    if (table.name == "certificate" && !table.is_list) {
      saw_head = true;
      for (const Entry& e : table.entries) {
        if (e.key == "surface") {
          c.surface = require_string(e);
        } else if (e.key == "lambda") {
          c.lambda = require_rational(e);
        } else if (e.key == "center") {
          c.center = require_string(e);
        } else {
          unknown_key(e, "certificate");
        }
      }
    } else if (table.name == "caps" && !table.is_list) {
      const std::vector<std::string> names{"a", "b"};
      for (const Entry& e : table.entries) {
        const std::size_t slot = c.caps.size();
        if (slot >= names.size() || e.key != names[slot]) {
          fail(e.line, "caps must list a, then b");
        }
        c.caps.push_back(require_rational(e));
      }
    } else if (table.name == "transform" && table.is_list) {
      TransformEntry t;
      for (const Entry& e : table.entries) {
        if (e.key == "curve") {
          t.curve = require_string(e);
        } else if (e.key == "germ") {
          for (const std::vector<long>& row : require_int_rows(e, 2)) {
            t.germ.push_back({row[0], row[1]});
          }
        } else if (e.key == "meets") {
          t.meets = require_int(e);
        } else {
          unknown_key(e, "transform");
        }
      }
      c.transforms.push_back(t);
    } else if (table.name == "forms" && !table.is_list) {
      for (const Entry& e : table.entries) {
        if (e.key == "m_cap") {
          c.m_cap = require_string(e);
        } else if (e.key == "mu") {
          c.mu = require_string(e);
        } else {
          unknown_key(e, "forms");
        }
      }
    } else if (table.name == "claim" && table.is_list) {
      ClaimSpec spec;
      for (const Entry& e : table.entries) {
        if (e.key == "kind") {
          const std::string& kind = require_string(e);
          if (kind == "pencil") {
            spec.kind = ClaimKind::kPencil;
          } else if (kind == "curve_restriction") {
            spec.kind = ClaimKind::kCurveRestriction;
          } else if (kind == "m_cap") {
            spec.kind = ClaimKind::kMCap;
          } else if (kind == "mu_bound") {
            spec.kind = ClaimKind::kMuBound;
          } else if (kind == "exceptional") {
            spec.kind = ClaimKind::kExceptional;
          } else if (kind == "transversal") {
            spec.kind = ClaimKind::kTransversal;
          } else {
            fail(e.line, "unknown claim kind '" + kind + "'");
          }
        } else if (e.key == "anchor") {
          spec.anchor = require_string(e);
        } else if (e.key == "form") {
          spec.form = require_string(e);
        } else if (e.key == "bound") {
          spec.bound = require_string(e);
        } else if (e.key == "degree") {
          spec.degree = require_int(e);
        } else if (e.key == "curve") {
          spec.curve = require_string(e);
        } else if (e.key == "index") {
          spec.index = require_int(e);
        } else if (e.key == "away_index") {
          spec.away_index = require_int(e);
        } else if (e.key == "expect") {
          if (require_string(e) != "known-divergence") {
            fail(e.line, "expect only accepts \"known-divergence\"");
          }
          spec.expect_divergence = true;
        } else {
          unknown_key(e, "claim");
        }
      }
      c.claims.push_back(spec);
    } else {
      fail(table.line, "unknown section [" + table.name + "]");
    }
  }
  if (!saw_head) {
    throw std::invalid_argument("surface_io: missing [certificate] section");
  }
  return c;
}

std::string serialize_surface(const SurfaceModel& s) {
  std::string out;
  out += "[surface]\n";
  out += "name = " + quoted(s.name) + "\n";
  out += "weights = " +
         int_array({s.weights.w[0], s.weights.w[1], s.weights.w[2], s.weights.w[3]}) +
         "\n";
  out += "degree = " + std::to_string(s.weights.d) + "\n";
  out += "alpha = " + quoted(s.alpha.str()) + "\n";
  out += "monomials = [";
  for (std::size_t i = 0; i < s.monomials.size(); ++i) {
    if (i) out += ", ";
    out += int_array({s.monomials[i][0], s.monomials[i][1], s.monomials[i][2],
                      s.monomials[i][3]});
  }
  out += "]\n";
  for (const QuotientSingularity& q : s.singularities) {
    out += "\n[[singularity]]\n";
    out += "label = " + quoted(q.label) + "\n";
    out += "point = " + int_array({q.point[0], q.point[1], q.point[2], q.point[3]}) + "\n";
    out += "type = " + int_array({q.n, q.a, q.b}) + "\n";
  }
  for (const CurveClass& c : s.curves) {
    out += "\n[[curve]]\n";
    out += "label = " + quoted(c.label) + "\n";
    if (c.hyperplane_degree) {
      out += "hyperplane = " + std::to_string(*c.hyperplane_degree) + "\n";
    }
    if (c.coordinate_pair) {
      out += "pair = " + int_array({c.coordinate_pair->first, c.coordinate_pair->second}) + "\n";
    }
    if (!c.plt_points.empty()) out += "plt = " + string_array(c.plt_points) + "\n";
    if (!c.singular_at.empty()) out += "singular = " + string_array(c.singular_at) + "\n";
    if (c.mu) out += "mu = " + quoted(c.mu->str()) + "\n";
  }
  for (const CurveRelation& r : s.relations) {
    out += "\n[[relation]]\n";
    out += "whole = " + quoted(r.lhs) + "\n";
    out += "parts = " + string_array(r.rhs) + "\n";
  }
  return out;
}

std::string serialize_certificate(const CertificateScript& c) {
  std::string out;
  out += "[certificate]\n";
  out += "surface = " + quoted(c.surface) + "\n";
  out += "lambda = " + quoted(c.lambda.str()) + "\n";
  out += "center = " + quoted(c.center) + "\n";
  out += "\n[caps]\n";
  const std::vector<std::string> names{"a", "b"};
  for (std::size_t i = 0; i < c.caps.size(); ++i) {
    out += names[i] + " = " + quoted(c.caps[i].str()) + "\n";
  }
  for (const TransformEntry& t : c.transforms) {
    out += "\n[[transform]]\n";
    out += "curve = " + quoted(t.curve) + "\n";
    out += "germ = [";
    for (std::size_t i = 0; i < t.germ.size(); ++i) {
      if (i) out += ", ";
      out += int_array({t.germ[i][0], t.germ[i][1]});
    }
    out += "]\n";
    out += "meets = " + std::to_string(t.meets) + "\n";
  }
  out += "\n[forms]\n";
  out += "m_cap = " + quoted(c.m_cap) + "\n";
  out += "mu = " + quoted(c.mu) + "\n";
  for (const ClaimSpec& spec : c.claims) {
    out += "\n[[claim]]\n";
    std::string kind;
    switch (spec.kind) {
      case ClaimKind::kPencil: kind = "pencil"; break;
      case ClaimKind::kCurveRestriction: kind = "curve_restriction"; break;
      case ClaimKind::kMCap: kind = "m_cap"; break;
      case ClaimKind::kMuBound: kind = "mu_bound"; break;
      case ClaimKind::kExceptional: kind = "exceptional"; break;
      case ClaimKind::kTransversal: kind = "transversal"; break;
    }
    out += "kind = " + quoted(kind) + "\n";
    out += "anchor = " + quoted(spec.anchor) + "\n";
    if (spec.degree) out += "degree = " + std::to_string(*spec.degree) + "\n";
    if (spec.curve) out += "curve = " + quoted(*spec.curve) + "\n";
    if (spec.index) out += "index = " + std::to_string(*spec.index) + "\n";
    if (spec.away_index) {
      out += "away_index = " + std::to_string(*spec.away_index) + "\n";
    }
    out += "form = " + quoted(spec.form) + "\n";
    out += "bound = " + quoted(spec.bound) + "\n";
    if (spec.expect_divergence) out += "expect = \"known-divergence\"\n";
  }
  return out;
}

}  // namespace wdp
