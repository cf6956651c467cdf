#include "wdp/cli.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wdp/basis_bound.hpp"
#include "wdp/blowup.hpp"
#include "wdp/certificate.hpp"
#include "wdp/defaults.hpp"
#include "wdp/report.hpp"
#include "wdp/surface_io.hpp"
#include "wdp/volume_profile.hpp"
#include "wdp/weights.hpp"
#include "wdp/zariski.hpp"

namespace wdp {
namespace {

using nlohmann::ordered_json;

struct CommonOpts {
  std::string format = "text";
  std::string output;
  bool strict = false;
};

[[noreturn]] void fail(const std::string& message) {
  throw std::invalid_argument(message);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot read file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int emit(const CommonOpts& opts, const std::string& text,
         const ordered_json& doc, std::ostream& out, std::ostream& err) {
  const std::string payload = opts.format == "json" ? doc.dump(2) + "\n" : text;
  if (!opts.output.empty()) {
    std::ofstream file(opts.output, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << opts.output << "\n";
      return 2;
    }
    file << payload;
    return 0;
  }
  out << payload;
  return 0;
}

bool selector_is_path(const std::string& selector) {
  return selector.find('/') != std::string::npos ||
         selector.find('.') != std::string::npos;
}

SurfaceModel resolve_surface(const std::string& selector,
                             const std::string& file) {
  if (!file.empty()) return load_surface(file);
  if (selector.empty()) fail("give a surface name or --file");
  return load_surface(selector);
}

std::string trimmed(const std::string& text) {
  const auto begin = text.find_first_not_of(" \t");
  if (begin == std::string::npos) return "";
  const auto end = text.find_last_not_of(" \t");
  return text.substr(begin, end - begin + 1);
}

long parse_positive(const std::string& text, const std::string& what) {
  const std::string item = trimmed(text);
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(item, &used);
  } catch (const std::exception&) {
    fail("bad " + what + " '" + text + "'");
  }
  if (used != item.size() || value <= 0) fail("bad " + what + " '" + text + "'");
  return value;
}

std::vector<long> parse_k_list(const std::string& text) {
  std::vector<long> ks;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const long value = parse_positive(item, "k value");
    if (!ks.empty() && value <= ks.back()) fail("k values must be increasing");
    ks.push_back(value);
  }
  if (ks.empty()) fail("empty k list");
  return ks;
}

std::string join(const std::vector<std::string>& parts,
                 const std::string& sep) {
  std::string out;
  for (const std::string& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

std::string monomial_str(const std::array<int, 4>& e) {
  static const std::array<const char*, 4> names = {"x", "y", "z", "t"};
  std::string out;
  for (int i = 0; i < 4; ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += " ";
    out += names[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

std::string type_str(long n, long a, long b) {
  return "1/" + std::to_string(n) + "(" + std::to_string(a) + ", " +
         std::to_string(b) + ")";
}

std::string curve_summary(const SurfaceModel& s, const CurveClass& c) {
  std::string out;
  if (c.hyperplane_degree) {
    out = "section of O(" + std::to_string(*c.hyperplane_degree) + ")";
  } else if (c.coordinate_pair) {
    const auto [i, j] = *c.coordinate_pair;
    std::vector<std::string> span;
    for (int k = 0; k < 4; ++k) {
      if (k != i && k != j) span.push_back(std::to_string(s.weights.w[k]));
    }
    out = "coordinate line in P(" + join(span, ", ") + ")";
  } else {
    out = "residual component";
  }
  if (c.mu) out += ", proportional to -K by " + c.mu->str();
  if (!c.plt_points.empty()) out += ", through " + join(c.plt_points, ", ");
  if (!c.singular_at.empty())
    out += ", singular at " + join(c.singular_at, ", ");
  return out;
}

// ---------------------------------------------------------------- info ----

std::string info_text(const SurfaceModel& s, const IntersectionTable& t) {
  const Quintuple& q = s.weights;
  std::ostringstream out;
  out << s.name << ": degree " << q.d << " hypersurface in P(" << q.w[0]
      << ", " << q.w[1] << ", " << q.w[2] << ", " << q.w[3] << ")\n";
  std::vector<std::string> eq;
  for (const auto& m : s.monomials) eq.push_back(monomial_str(m));
  out << "equation monomials: " << join(eq, ", ") << "\n";
  out << "amplitude I = " << amplitude(q) << "\n";
  out << "well formed: " << (is_well_formed(q) ? "yes" : "no") << "\n";
  out << "obstruction I > 3 w0: " << (gmsy_obstructed(q) ? "yes" : "no")
      << "\n";
  out << "(-K)^2 = " << pretty(anticanonical_selfint(q)) << "\n";
  out << "alpha = " << pretty(s.alpha) << "\n";
  const auto window = alpha_delta_window(s.alpha);
  out << "delta window: (" << window.first.str() << ", " << window.second.str()
      << ")\n";
  out << "monomials of degree " << q.d << ": " << count_monomials(q, q.d)
      << "\n";
  out << "singular points:\n";
  for (const QuotientSingularity& p : s.singularities) {
    out << "  " << p.label << ": " << type_str(p.n, p.a, p.b) << " at ("
        << p.point[0] << ", " << p.point[1] << ", " << p.point[2] << ", "
        << p.point[3] << ")\n";
  }
  out << "curves:\n";
  for (const CurveClass& c : s.curves) {
    out << "  " << c.label << ": " << curve_summary(s, c) << "\n";
  }
  for (const CurveRelation& rel : s.relations) {
    out << "relation: " << rel.lhs << " = " << join(rel.rhs, " + ") << "\n";
  }
  out << "intersection table (basis: " << join(t.basis(), ", ") << "):\n";
  const auto& basis = t.basis();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i; j < basis.size(); ++j) {
      out << "  " << basis[i] << " . " << basis[j] << " = "
          << pretty(t.pair(basis[i], basis[j])) << "\n";
    }
  }
  for (const std::string& c : basis) {
    out << "  -K . " << c << " = " << pretty(t.antik(c)) << "\n";
  }
  return out.str();
}

ordered_json info_json(const SurfaceModel& s, const IntersectionTable& t) {
  const Quintuple& q = s.weights;
  ordered_json doc;
  doc["surface"] = s.name;
  doc["weights"] = q.w;
  doc["degree"] = q.d;
  doc["amplitude"] = amplitude(q);
  doc["well_formed"] = is_well_formed(q);
  doc["obstructed"] = gmsy_obstructed(q);
  doc["antik_selfint"] = anticanonical_selfint(q).str();
  doc["alpha"] = s.alpha.str();
  const auto window = alpha_delta_window(s.alpha);
  doc["window"] = {window.first.str(), window.second.str()};
  doc["monomial_count"] = count_monomials(q, q.d);
  doc["equation"] = ordered_json::array();
  for (const auto& m : s.monomials) doc["equation"].push_back(m);
  doc["singularities"] = ordered_json::array();
  for (const QuotientSingularity& p : s.singularities) {
    ordered_json row;
    row["label"] = p.label;
    row["type"] = {p.n, p.a, p.b};
    row["point"] = p.point;
    doc["singularities"].push_back(row);
  }
  doc["curves"] = ordered_json::array();
  for (const CurveClass& c : s.curves) {
    ordered_json row;
    row["label"] = c.label;
    if (c.hyperplane_degree) row["hyperplane"] = *c.hyperplane_degree;
    if (c.coordinate_pair)
      row["pair"] = {c.coordinate_pair->first, c.coordinate_pair->second};
    if (c.mu) row["mu"] = c.mu->str();
    if (!c.plt_points.empty()) row["plt"] = c.plt_points;
    if (!c.singular_at.empty()) row["singular"] = c.singular_at;
    doc["curves"].push_back(row);
  }
  if (!s.relations.empty()) {
    doc["relations"] = ordered_json::array();
    for (const CurveRelation& rel : s.relations) {
      ordered_json row;
      row["whole"] = rel.lhs;
      row["parts"] = rel.rhs;
      doc["relations"].push_back(row);
    }
  }
  ordered_json table;
  table["basis"] = t.basis();
  table["antik"] = ordered_json::object();
  for (const std::string& c : t.basis()) table["antik"][c] = t.antik(c).str();
  table["pairs"] = ordered_json::array();
  const auto& basis = t.basis();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i; j < basis.size(); ++j) {
      table["pairs"].push_back(
          {basis[i], basis[j], t.pair(basis[i], basis[j]).str()});
    }
  }
  doc["table"] = table;
  return doc;
}

// -------------------------------------------------------------- volume ----

std::string divisor_label(const std::string& curve, const Rational& lambda) {
  std::string out = "-K";
  if (lambda.is_zero()) return out;
  out += lambda.is_negative() ? " + " : " - ";
  const Rational mag = abs(lambda);
  if (!(mag == Rational(1))) out += mag.str() + " ";
  return out + curve;
}

int cmd_volume(const SurfaceModel& s, const std::string& curve,
               const std::string& at_text, const CommonOpts& opts,
               std::ostream& out, std::ostream& err) {
  const IntersectionTable t = complete_table(s);
  const QDivisor d0 = QDivisor::anti_canonical(s);
  const VolumeProfile profile = volume_profile(t, d0, curve);

  if (!at_text.empty()) {
    const Rational at = Rational::parse(at_text);
    if (at.is_negative()) fail("evaluation point must be >= 0");
    const Rational value =
        at > profile.pe_end ? Rational(0) : profile.volume.eval(at);
    std::ostringstream text;
    text << "vol(" << divisor_label(curve, at) << ") = " << pretty(value)
         << "\n";
    ordered_json doc;
    doc["surface"] = s.name;
    doc["curve"] = curve;
    doc["at"] = at.str();
    doc["value"] = value.str();
    return emit(opts, text.str(), doc, out, err);
  }

  std::ostringstream text;
  text << "volume profile for -K - lambda " << curve << " on " << s.name
       << "\n";
  text << "nef up to lambda = " << profile.nef_end.str()
       << "; pseudoeffective up to lambda = " << profile.pe_end.str() << "\n";
  for (const ProfileChamber& ch : profile.chambers) {
    text << "  [" << ch.lo.str() << ", " << ch.hi.str()
         << "]: vol = " << ch.piece.str("lambda");
    if (!ch.negative.empty()) {
      std::vector<std::string> parts;
      for (const NegativeCoefficient& n : ch.negative) {
        parts.push_back(n.curve + " = " + n.str());
      }
      text << "; negative part: " << join(parts, ", ");
    }
    text << "\n";
  }
  text << "integral = " << pretty(profile.total_integral()) << "\n";

  ordered_json doc;
  doc["surface"] = s.name;
  doc["curve"] = curve;
  doc["nef_end"] = profile.nef_end.str();
  doc["pe_end"] = profile.pe_end.str();
  doc["chambers"] = ordered_json::array();
  for (const ProfileChamber& ch : profile.chambers) {
    ordered_json row;
    row["interval"] = {ch.lo.str(), ch.hi.str()};
    row["volume"] = ch.piece.str("lambda");
    row["negative"] = ordered_json::array();
    for (const NegativeCoefficient& n : ch.negative) {
      ordered_json neg;
      neg["curve"] = n.curve;
      neg["coefficient"] = n.str();
      row["negative"].push_back(neg);
    }
    doc["chambers"].push_back(row);
  }
  doc["integral"] = profile.total_integral().str();
  return emit(opts, text.str(), doc, out, err);
}

// ------------------------------------------------------------- zariski ----

int cmd_zariski(const SurfaceModel& s, const std::string& curve,
                const std::string& lambda_text, const CommonOpts& opts,
                std::ostream& out, std::ostream& err) {
  const IntersectionTable t = complete_table(s);
  const Rational lambda = Rational::parse(lambda_text);
  QDivisor d = QDivisor::anti_canonical(s);
  d.add(curve, -lambda);
  const ZariskiResult z = zariski(t, d);

  std::ostringstream text;
  text << "divisor " << divisor_label(curve, lambda) << " = " << d.str()
       << " on " << s.name << "\n";
  text << "pseudoeffective: " << (z.pseudoeffective ? "yes" : "no") << "\n";
  if (z.pseudoeffective) {
    text << "nef part: " << z.nef_part.str() << "\n";
    if (z.negative_support.empty()) {
      text << "negative part: none\n";
    } else {
      std::vector<std::string> parts;
      for (const std::string& c : z.negative_support) {
        parts.push_back(z.negative_part.at(c).str() + " " + c);
      }
      text << "negative part: " << join(parts, " + ") << "\n";
    }
    text << "volume = " << pretty(z.volume) << "\n";
  }

  ordered_json doc;
  doc["surface"] = s.name;
  doc["curve"] = curve;
  doc["lambda"] = lambda.str();
  doc["pseudoeffective"] = z.pseudoeffective;
  if (z.pseudoeffective) {
    doc["nef_part"] = ordered_json::object();
    for (const auto& [label, value] : z.nef_part.coeffs) {
      doc["nef_part"][label] = value.str();
    }
    doc["negative_part"] = ordered_json::object();
    for (const std::string& c : z.negative_support) {
      doc["negative_part"][c] = z.negative_part.at(c).str();
    }
    doc["volume"] = z.volume.str();
  }
  return emit(opts, text.str(), doc, out, err);
}

// -------------------------------------------------------------- blowup ----

int cmd_blowup(const std::optional<SingularityType>& type_arg,
               const std::string& selector, const std::string& file,
               const std::string& label, const CommonOpts& opts,
               std::ostream& out, std::ostream& err) {
  SingularityType type;
  std::string headline;
  if (type_arg) {
    type = *type_arg;
    headline = "germ " + type_str(type.n, type.a, type.b);
  } else {
    if (label.empty()) fail("give a surface and point label, or --type n,a,b");
    const SurfaceModel s = resolve_surface(selector, file);
    const QuotientSingularity& p = s.singularity(label);
    type = SingularityType{p.n, p.a, p.b};
    headline = label + " on " + s.name + ": germ " +
               type_str(type.n, type.a, type.b);
  }
  const BlowupChart chart = blowup_chart(type);

  std::ostringstream text;
  text << headline << "\n";
  text << "discrepancy = " << pretty(chart.discrepancy) << "\n";
  text << "E^2 = " << pretty(chart.exceptional_self) << "\n";
  if (chart.exceptional_singularities.empty()) {
    text << "residual points on E: none\n";
  } else {
    std::vector<std::string> parts;
    for (const SingularityType& r : chart.exceptional_singularities) {
      parts.push_back(type_str(r.n, r.a, r.b));
    }
    text << "residual points on E: " << join(parts, ", ") << "\n";
  }

  ordered_json doc;
  doc["type"] = {type.n, type.a, type.b};
  doc["discrepancy"] = chart.discrepancy.str();
  doc["exceptional_self"] = chart.exceptional_self.str();
  doc["residual"] = ordered_json::array();
  for (const SingularityType& r : chart.exceptional_singularities) {
    doc["residual"].push_back({r.n, r.a, r.b});
  }
  return emit(opts, text.str(), doc, out, err);
}

// --------------------------------------------------------- basis-bound ----

int cmd_basis_bound(const SurfaceModel& s, const std::string& curve,
                    const std::string& k_text, const CommonOpts& opts,
                    std::ostream& out, std::ostream& err) {
  std::optional<DirectionBound> bound;
  try {
    bound = direction_bound(s, curve, std::nullopt);
  } catch (const std::invalid_argument&) {
    if (k_text.empty()) throw;
  }
  std::vector<FiltrationCounts> ladder;
  if (!k_text.empty()) {
    for (long k : parse_k_list(k_text)) {
      ladder.push_back(discrete_filtration(s, curve, k));
    }
  }

  std::ostringstream text;
  if (bound) {
    const std::string how = bound->method == "proportional"
                                ? "proportional class"
                                : "volume profile";
    text << "s(" << curve << ") = " << pretty(bound->s_value) << " via " << how
         << "\n";
  }
  for (const FiltrationCounts& fc : ladder) {
    text << "k = " << fc.k << ": bound = " << pretty(fc.bound)
         << ", r0 = " << fc.r0 << ", terms = " << fc.termination_index()
         << "\n";
  }

  ordered_json doc;
  doc["surface"] = s.name;
  doc["curve"] = curve;
  if (bound) {
    doc["s"] = bound->s_value.str();
    doc["method"] = bound->method;
  }
  if (!ladder.empty()) {
    doc["ladder"] = ordered_json::array();
    for (const FiltrationCounts& fc : ladder) {
      ordered_json row;
      row["k"] = fc.k;
      row["bound"] = fc.bound.str();
      row["r0"] = fc.r0;
      row["terms"] = fc.termination_index();
      doc["ladder"].push_back(row);
    }
  }
  return emit(opts, text.str(), doc, out, err);
}

// ------------------------------------------------------------ lct-germ ----

int cmd_lct_germ(long w1, long w2, long delta, const CommonOpts& opts,
                 std::ostream& out, std::ostream& err) {
  const Rational value = lct_germ(w1, w2, delta);
  std::ostringstream text;
  text << "lct = " << pretty(value) << "\n";
  ordered_json doc;
  doc["w1"] = w1;
  doc["w2"] = w2;
  doc["delta"] = delta;
  doc["lct"] = value.str();
  return emit(opts, text.str(), doc, out, err);
}

// ------------------------------------------------------ verify / report ----

struct Selection {
  std::vector<std::string> selectors;
  bool all = false;
  std::string lambda_text;
  std::string cert_path;
};

std::vector<SurfaceReport> run_reports(const Selection& sel) {
  const std::vector<std::string> chosen =
      sel.all ? builtin_surface_names() : sel.selectors;
  if (chosen.empty()) fail("give one or more surfaces or --all");
  if (!sel.cert_path.empty() && chosen.size() != 1) {
    fail("--cert applies to a single surface");
  }
  std::optional<Rational> lambda;
  if (!sel.lambda_text.empty()) lambda = Rational::parse(sel.lambda_text);

  std::vector<SurfaceReport> reports;
  for (const std::string& selector : chosen) {
    const SurfaceModel s = load_surface(selector);
    std::optional<CertificateScript> script;
    if (!sel.cert_path.empty()) {
      script = parse_certificate(read_file(sel.cert_path));
    } else {
      script =
          load_certificate(selector_is_path(selector) ? s.name : selector);
    }
    reports.push_back(build_report(s, script, lambda));
  }
  return reports;
}

int reports_exit_code(const std::vector<SurfaceReport>& reports, bool strict) {
  for (const SurfaceReport& r : reports) {
    if (!r.pass) return 1;
  }
  if (strict) {
    for (const SurfaceReport& r : reports) {
      if (!r.strict_ok) return 1;
    }
  }
  return 0;
}

std::string verify_summary(const std::vector<SurfaceReport>& reports,
                           bool strict) {
  std::vector<std::string> failing;
  std::vector<std::string> strict_failing;
  for (const SurfaceReport& r : reports) {
    if (!r.pass) {
      failing.push_back(r.surface);
    } else if (strict && !r.strict_ok) {
      strict_failing.push_back(r.surface);
    }
  }
  std::ostringstream line;
  line << "verified " << reports.size() << " surface(s): ";
  if (failing.empty() && strict_failing.empty()) {
    line << "all pass";
  } else {
    if (!failing.empty()) line << "failing " << join(failing, ", ");
    if (!strict_failing.empty()) {
      if (!failing.empty()) line << "; ";
      line << "strict failures " << join(strict_failing, ", ");
    }
  }
  line << "\n";
  return line.str();
}

int cmd_reports(const Selection& sel, bool with_summary,
                const CommonOpts& opts, std::ostream& out, std::ostream& err) {
  const std::vector<SurfaceReport> reports = run_reports(sel);
  const bool single = !sel.all && reports.size() == 1;
  const ordered_json doc =
      single ? report_json(reports.front()) : report_json(reports);
  std::string text =
      single ? report_text(reports.front()) : report_text(reports);
  if (with_summary) text += verify_summary(reports, opts.strict);
  const int write_code = emit(opts, text, doc, out, err);
  if (write_code != 0) return write_code;
  return reports_exit_code(reports, opts.strict);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "exact intersection theory, volumes, and stability bounds for del "
      "Pezzo hypersurfaces in weighted projective 3-space"};
  app.name("wdp");
  CommonOpts common;
  app.add_option("--format", common.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--output", common.output, "write the result to a file");
  app.add_flag("--strict", common.strict,
               "treat report warnings and recorded divergences as failures");
  app.require_subcommand(1);

  std::string sel_surface;
  std::string sel_file;
  std::string sel_curve;
  std::string at_text;
  std::string lambda_text = "0";
  std::string k_text;
  std::string type_text;
  std::string point_label;
  long w1 = 0;
  long w2 = 0;
  long delta = 0;
  Selection selection;

  CLI::App* info = app.add_subcommand("info", "print the surface model");
  info->fallthrough();
  info->add_option("surface", sel_surface, "surface name or file");
  info->add_option("--file", sel_file, "load the surface from a file");

  CLI::App* volume =
      app.add_subcommand("volume", "volume profile of -K - lambda C");
  volume->fallthrough();
  volume->add_option("surface", sel_surface, "surface name or file");
  volume->add_option("curve", sel_curve, "direction curve")->required();
  volume->add_option("--at", at_text, "evaluate at one rational lambda");
  volume->add_option("--file", sel_file, "load the surface from a file");

  CLI::App* zariski_cmd =
      app.add_subcommand("zariski", "Zariski decomposition of -K - lambda C");
  zariski_cmd->fallthrough();
  zariski_cmd->add_option("surface", sel_surface, "surface name or file");
  zariski_cmd->add_option("curve", sel_curve, "direction curve")->required();
  zariski_cmd->add_option("--lambda", lambda_text, "coefficient of C");
  zariski_cmd->add_option("--file", sel_file, "load the surface from a file");

  CLI::App* blowup =
      app.add_subcommand("blowup", "weighted blow-up chart of a quotient germ");
  blowup->fallthrough();
  blowup->add_option("surface", sel_surface, "surface name or file");
  blowup->add_option("point", point_label, "singular point label");
  blowup->add_option("--type", type_text, "explicit germ as n,a,b");
  blowup->add_option("--file", sel_file, "load the surface from a file");

  CLI::App* basis =
      app.add_subcommand("basis-bound", "expected vanishing order bounds");
  basis->fallthrough();
  basis->add_option("surface", sel_surface, "surface name or file");
  basis->add_option("curve", sel_curve, "curve label")->required();
  basis->add_option("--k", k_text,
                    "comma separated levels for the discrete bound");
  basis->add_option("--file", sel_file, "load the surface from a file");

  CLI::App* lct =
      app.add_subcommand("lct-germ", "log canonical threshold of a germ");
  lct->fallthrough();
  lct->add_option("w1", w1, "first coordinate weight")->required();
  lct->add_option("w2", w2, "second coordinate weight")->required();
  lct->add_option("delta", delta, "weighted degree of the germ")->required();

  CLI::App* verify =
      app.add_subcommand("verify", "check the stability certificates");
  verify->fallthrough();
  verify->add_option("surface", selection.selectors, "surfaces to check");
  verify->add_flag("--all", selection.all, "check every shipped surface");
  verify->add_option("--lambda", selection.lambda_text,
                     "override the certificate coefficient");
  verify->add_option("--cert", selection.cert_path,
                     "load the certificate from a file");

  CLI::App* report =
      app.add_subcommand("report", "full stability report per surface");
  report->fallthrough();
  report->add_option("surface", selection.selectors, "surfaces to report");
  report->add_flag("--all", selection.all, "report every shipped surface");
  report->add_option("--lambda", selection.lambda_text,
                     "override the certificate coefficient");
  report->add_option("--cert", selection.cert_path,
                     "load the certificate from a file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (info->parsed()) {
      const SurfaceModel s = resolve_surface(sel_surface, sel_file);
      const IntersectionTable t = complete_table(s);
      return emit(common, info_text(s, t), info_json(s, t), out, err);
    }
    if (volume->parsed()) {
      const SurfaceModel s = resolve_surface(sel_surface, sel_file);
      return cmd_volume(s, sel_curve, at_text, common, out, err);
    }
    if (zariski_cmd->parsed()) {
      const SurfaceModel s = resolve_surface(sel_surface, sel_file);
      return cmd_zariski(s, sel_curve, lambda_text, common, out, err);
    }
    if (blowup->parsed()) {
      std::optional<SingularityType> type;
      if (!type_text.empty()) {
        std::vector<long> parts;
        std::stringstream in(type_text);
        std::string item;
        while (std::getline(in, item, ',')) {
          parts.push_back(parse_positive(item, "type entry"));
        }
        if (parts.size() != 3) fail("--type wants n,a,b");
        type = SingularityType{parts[0], parts[1], parts[2]};
      }
      return cmd_blowup(type, sel_surface, sel_file, point_label, common, out,
                        err);
    }
    if (basis->parsed()) {
      const SurfaceModel s = resolve_surface(sel_surface, sel_file);
      return cmd_basis_bound(s, sel_curve, k_text, common, out, err);
    }
    if (lct->parsed()) {
      return cmd_lct_germ(w1, w2, delta, common, out, err);
    }
    if (verify->parsed()) {
      return cmd_reports(selection, true, common, out, err);
    }
    if (report->parsed()) {
      return cmd_reports(selection, false, common, out, err);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace wdp
