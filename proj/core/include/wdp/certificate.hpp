#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wdp/affine.hpp"
#include "wdp/blowup.hpp"
#include "wdp/polytope.hpp"
#include "wdp/rational.hpp"
#include "wdp/surface.hpp"

namespace wdp {

// Strict transform data for one curve through the blow-up center: the curve
// germ in the orbifold chart coordinates (exponent pairs against the chart
// weights), and the index of the exceptional point the transform crosses
// (1 for a smooth point of E).
struct TransformEntry {
  std::string curve;
  std::vector<std::array<long, 2>> germ;
  long meets = 1;
};

enum class ClaimKind {
  kPencil,
  kCurveRestriction,
  kMCap,
  kMuBound,
  kExceptional,
  kTransversal,
};

// One inequality of a certificate. The numeric payload is stored in the
// script and regenerated from the geometry when the certificate runs; a
// stored/derived mismatch means the script is malformed.
struct ClaimSpec {
  ClaimKind kind = ClaimKind::kPencil;
  std::string anchor;
  std::string form;
  std::string bound;
  std::optional<long> degree;        // pencil: class of the moved family
  std::optional<std::string> curve;  // curve_restriction and transversal
  std::optional<long> index;         // exceptional: index of the point on E
  std::optional<long> away_index;    // curve_restriction: declared worst
                                     // quotient index away from the center
  bool expect_divergence = false;    // recorded-failure claim
};

struct CertificateScript {
  std::string surface;
  Rational lambda;
  std::string center;
  std::vector<Rational> caps;  // aligned with transforms; variables a, b
  std::vector<TransformEntry> transforms;
  std::string m_cap;  // stored form for the cap on the multiplicity m
  std::string mu;     // stored form for the pulled-back boundary coefficient
  std::vector<ClaimSpec> claims;
};

enum class Verdict { kPass, kFail, kKnownDivergence };

std::string verdict_str(Verdict v);

struct ClaimResult {
  std::string anchor;
  std::string form;
  std::string bound;
  Verdict verdict = Verdict::kFail;
  Rational max_value;
  std::optional<Point> witness;  // vertex above the bound when not passing
};

struct CertificateOutcome {
  std::string surface;
  Rational lambda;
  bool lambda_overridden = false;
  BlowupChart chart;
  std::vector<std::string> variables;
  std::vector<ClaimResult> claims;
  bool pass = false;         // no failing claim
  bool strict_pass = false;  // no failing and no recorded-divergence claim
  std::optional<Rational> delta_bound;  // lambda when the certificate passes
};

// Replays the script against the surface geometry. The hypothesis polytope,
// the m-cap, the mu form, and every claim are rebuilt from the intersection
// table and the blow-up chart, then compared with the stored text. With
// lambda_override set, stored lambda-dependent text is not compared and
// explicit claim bounds fall back to their generic thresholds.
CertificateOutcome verify_certificate(
    const SurfaceModel& s, const CertificateScript& script,
    const std::optional<Rational>& lambda_override = {});

// Intersection of a degree-m pencil member with an anticanonical divisor:
// m * I * d / (w0*w1*w2*w3).
Rational pencil_degree_check(const SurfaceModel& s, long pencil_class);

// Open window (3*alpha/2, 3*alpha) that must contain the stability
// threshold, from the global log canonical threshold alone.
std::pair<Rational, Rational> alpha_delta_window(const Rational& alpha);
bool window_contains(const std::pair<Rational, Rational>& window,
                     const Rational& delta);

}  // namespace wdp
