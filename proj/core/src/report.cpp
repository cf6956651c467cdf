#include "wdp/report.hpp"

#include <algorithm>

namespace wdp {

namespace {

nlohmann::ordered_json claim_json(const CertificateOutcome& outcome,
                                  const ClaimResult& claim) {
  nlohmann::ordered_json j;
  j["anchor"] = claim.anchor;
  j["form"] = claim.form;
  j["bound"] = claim.bound;
  j["verdict"] = verdict_str(claim.verdict);
  if (claim.witness) {
    nlohmann::ordered_json vertex = nlohmann::ordered_json::array();
    for (const std::string& var : outcome.variables) {
      vertex.push_back(claim.witness->at(var).str());
    }
    j["witness_vertex"] = vertex;
  }
  return j;
}

}  // namespace

std::string pretty(const Rational& value) {
  return value.str() + " (" + value.decimal() + ")";
}

SurfaceReport build_report(const SurfaceModel& s,
                           const std::optional<CertificateScript>& script,
                           const std::optional<Rational>& lambda_override) {
  SurfaceReport r;
  r.surface = s.name;
  r.alpha = s.alpha;
  r.window = alpha_delta_window(s.alpha);

  if (script) {
    r.certificate = verify_certificate(s, *script, lambda_override);
    r.pass = r.certificate->pass;
    for (std::size_t v = 0; v < script->transforms.size(); ++v) {
      r.directions.push_back(direction_bound(
          s, script->transforms[v].curve, script->caps[v]));
    }
  }

  if (r.certificate && r.certificate->delta_bound) {
    r.delta_lower = *r.certificate->delta_bound;
    r.method = "certificate";
    if (!window_contains(r.window, r.delta_lower)) {
      r.warnings.push_back("certified bound " + r.delta_lower.str() +
                           " lies outside the alpha window");
    }
  } else {
    r.delta_lower = r.window.first;
    r.method = "window";
    if (r.certificate) {
      r.warnings.push_back(
          "certificate failed, falling back to the window bound");
    }
  }

  if (r.certificate) {
    for (const ClaimResult& claim : r.certificate->claims) {
      if (claim.verdict == Verdict::kKnownDivergence) {
        r.warnings.push_back("claim '" + claim.anchor +
                             "' records a value above its bound");
      }
    }
  }
  for (const DirectionBound& direction : r.directions) {
    if (!direction.admissible) {
      r.warnings.push_back("cap " + direction.cap->str() + " on " +
                           direction.curve +
                           " is below the expected vanishing order " +
                           direction.s_value.str());
    }
  }

  r.strict_ok = r.pass && r.warnings.empty() &&
                (!r.certificate || r.certificate->strict_pass);
  return r;
}

nlohmann::ordered_json report_json(const SurfaceReport& r) {
  nlohmann::ordered_json j;
  j["surface"] = r.surface;
  j["alpha"] = r.alpha.str();
  j["delta_lower"] = r.delta_lower.str();
  j["window"] = {r.window.first.str(), r.window.second.str()};
  j["claims"] = nlohmann::ordered_json::array();
  if (r.certificate) {
    for (const ClaimResult& claim : r.certificate->claims) {
      j["claims"].push_back(claim_json(*r.certificate, claim));
    }
  }
  j["method"] = r.method;
  if (r.certificate) j["lambda"] = r.certificate->lambda.str();
  j["basis_bounds"] = nlohmann::ordered_json::array();
  for (const DirectionBound& direction : r.directions) {
    nlohmann::ordered_json row;
    row["curve"] = direction.curve;
    row["s"] = direction.s_value.str();
    if (direction.cap) row["cap"] = direction.cap->str();
    row["method"] = direction.method;
    row["admissible"] = direction.admissible;
    j["basis_bounds"].push_back(row);
  }
  j["warnings"] = r.warnings;
  return j;
}

nlohmann::ordered_json report_json(const std::vector<SurfaceReport>& rs) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const SurfaceReport& r : rs) j.push_back(report_json(r));
  return j;
}

std::string report_text(const SurfaceReport& r) {
  std::string out;
  out += "surface " + r.surface + "\n";
  out += "alpha " + pretty(r.alpha) + "\n";
  out += "window (" + r.window.first.str() + ", " + r.window.second.str() +
         ")\n";
  out += "delta lower bound " + pretty(r.delta_lower) + " via " + r.method +
         "\n";
  if (r.certificate) {
    out += "certificate lambda " + pretty(r.certificate->lambda);
    if (r.certificate->lambda_overridden) out += " [override]";
    out += "\n";
    out += "claims:\n";
    for (const ClaimResult& claim : r.certificate->claims) {
      out += "  [" + verdict_str(claim.verdict) + "] " + claim.anchor + ": " +
             claim.form + " <= " + claim.bound +
             ", max " + pretty(claim.max_value) + "\n";
      if (claim.witness) {
        out += "    at vertex (";
        bool first = true;
        for (const std::string& var : r.certificate->variables) {
          if (!first) out += ", ";
          out += var + " = " + claim.witness->at(var).str();
          first = false;
        }
        out += ")\n";
      }
    }
  }
  if (!r.directions.empty()) {
    out += "basis bounds:\n";
    for (const DirectionBound& d : r.directions) {
      out += "  " + d.curve + ": s = " + pretty(d.s_value);
      if (d.cap) {
        out += ", cap " + d.cap->str();
        out += d.admissible ? ", admissible" : ", NOT admissible";
      }
      out += " (" + d.method + ")\n";
    }
  }
  for (const std::string& w : r.warnings) out += "warning: " + w + "\n";
  return out;
}

std::string report_text(const std::vector<SurfaceReport>& rs) {
  std::string out;
  for (const SurfaceReport& r : rs) {
    if (!out.empty()) out += "\n";
    out += report_text(r);
  }
  return out;
}

}  // namespace wdp
