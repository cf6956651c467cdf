#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "wdp/basis_bound.hpp"
#include "wdp/certificate.hpp"
#include "wdp/rational.hpp"
#include "wdp/surface.hpp"

namespace wdp {

// Consolidated stability summary for one surface: the threshold window from
// alpha, the best certified delta lower bound, the claim table behind it,
// and the admissibility rows for the certificate caps.
struct SurfaceReport {
  std::string surface;
  Rational alpha;
  std::pair<Rational, Rational> window;
  Rational delta_lower;
  std::string method;  // "certificate" or "window"
  std::optional<CertificateOutcome> certificate;
  std::vector<DirectionBound> directions;
  std::vector<std::string> warnings;
  bool pass = true;       // no failing claim
  bool strict_ok = true;  // additionally no warnings or recorded divergences
};

// Runs the certificate when one is supplied and falls back to the window
// bound delta >= 3*alpha/2 otherwise (or when the certificate fails).
SurfaceReport build_report(const SurfaceModel& s,
                           const std::optional<CertificateScript>& script,
                           const std::optional<Rational>& lambda_override = {});

nlohmann::ordered_json report_json(const SurfaceReport& r);
nlohmann::ordered_json report_json(const std::vector<SurfaceReport>& rs);

std::string report_text(const SurfaceReport& r);
std::string report_text(const std::vector<SurfaceReport>& rs);

// Canonical "p/q (decimal)" rendering used by all text output.
std::string pretty(const Rational& value);

}  // namespace wdp
