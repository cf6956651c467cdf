#include "wdp/certificate.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>

#include "wdp/weights.hpp"
#include "wdp/zariski.hpp"

namespace wdp {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw std::invalid_argument("certificate: " + what);
}

struct DerivedClaim {
  AffineForm form;
  Rational bound;
  std::string form_text;
  std::string bound_text;
  bool compare_form = true;
  bool compare_bound = true;
};

}  // namespace

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kKnownDivergence:
      return "known-divergence";
  }
  fail("unknown verdict");
}

Rational pencil_degree_check(const SurfaceModel& s, long pencil_class) {
  if (pencil_class <= 0) fail("pencil class must be positive");
  return ambient_pairing(s.weights, pencil_class, amplitude(s.weights));
}

std::pair<Rational, Rational> alpha_delta_window(const Rational& alpha) {
  if (!alpha.is_positive()) fail("alpha must be positive");
  return {Rational(3) * alpha / Rational(2), Rational(3) * alpha};
}

bool window_contains(const std::pair<Rational, Rational>& window,
                     const Rational& delta) {
  return window.first < delta && delta < window.second;
}

CertificateOutcome verify_certificate(
    const SurfaceModel& s, const CertificateScript& script,
    const std::optional<Rational>& lambda_override) {
  if (script.surface != s.name) {
    fail("script targets " + script.surface + ", surface is " + s.name);
  }
  const bool overridden = lambda_override.has_value();
  const Rational lambda = overridden ? *lambda_override : script.lambda;
  if (!(Rational(1) < lambda)) fail("lambda must exceed 1");

  const QuotientSingularity& center = s.singularity(script.center);
  const BlowupChart chart =
      blowup_chart(SingularityType{center.n, center.a, center.b});
  const IntersectionTable table = complete_table(s);
  const QDivisor antik = QDivisor::anti_canonical(s);
  // Positive part of -E^2, the pairing weight n/(a*b) of the exceptional
  // curve against the multiplicity variable m.
  const Rational e_weight = -chart.exceptional_self;

  if (script.transforms.empty() || script.transforms.size() > 2) {
    fail("expected one or two strict transforms");
  }
  if (script.caps.size() != script.transforms.size()) {
    fail("caps and transforms disagree");
  }

  const std::vector<std::string> names{"a", "b"};
  std::vector<std::string> variables;
  std::vector<Rational> crossing(script.transforms.size());
  std::vector<Rational> transform_coeff(script.transforms.size());
  std::vector<long> pending = [&] {
    std::vector<long> idx;
    for (const SingularityType& t : chart.exceptional_singularities) {
      idx.push_back(t.n);
    }
    return idx;
  }();

  auto consume = [&pending](long index, const std::string& what) {
    const auto it = std::find(pending.begin(), pending.end(), index);
    if (it == pending.end()) {
      fail("no unclaimed exceptional point of index " + std::to_string(index) +
           " for " + what);
    }
    pending.erase(it);
  };

  std::optional<std::size_t> cap_source;
  for (std::size_t v = 0; v < script.transforms.size(); ++v) {
    const TransformEntry& entry = script.transforms[v];
    if (!table.has_curve(entry.curve)) {
      fail("transform curve " + entry.curve + " is not a basis curve");
    }
    if (!script.caps[v].is_positive()) fail("caps must be positive");
    variables.push_back(names[v]);
    transform_coeff[v] = transform_coefficient(entry.germ, chart.center);
    crossing[v] = transform_coeff[v] * e_weight;
    if (crossing[v] != Rational(1) / Rational(entry.meets)) {
      fail("transform of " + entry.curve +
           " does not cross the exceptional curve with local weight 1/" +
           std::to_string(entry.meets));
    }
    if (entry.meets > 1) {
      consume(entry.meets, "transform of " + entry.curve);
    } else if (cap_source) {
      fail("more than one transform crosses E transversally");
    } else {
      cap_source = v;
    }
  }
  if (!cap_source) fail("no transform crosses E transversally");
  variables.push_back("m");

  // Cap on m from nonnegativity of the transform with E-degree 1 against the
  // pulled-back boundary.
  const std::string& cap_curve = script.transforms[*cap_source].curve;
  AffineForm m_cap(pair_with_curve(table, antik, cap_curve));
  for (std::size_t v = 0; v < script.transforms.size(); ++v) {
    m_cap.add_term(names[v],
                   -table.pair(script.transforms[v].curve, cap_curve));
  }
  if (AffineForm::parse(script.m_cap) != m_cap) {
    fail("stored m-cap differs from the derived bound " + m_cap.str());
  }

  AffineForm mu(-chart.discrepancy);
  for (std::size_t v = 0; v < script.transforms.size(); ++v) {
    mu.add_term(names[v], lambda * transform_coeff[v]);
  }
  mu.add_term("m", lambda);
  if (!overridden && AffineForm::parse(script.mu) != mu) {
    fail("stored mu form differs from the derived form " + mu.str());
  }

  std::vector<AffineForm> constraints;
  for (std::size_t v = 0; v < script.transforms.size(); ++v) {
    constraints.push_back(AffineForm::variable(names[v]));
    constraints.push_back(AffineForm(script.caps[v]) -
                          AffineForm::variable(names[v]));
  }
  constraints.push_back(AffineForm::variable("m"));
  constraints.push_back(m_cap - AffineForm::variable("m"));
  const Polytope region(variables, constraints);

  const auto transform_slot = [&](const std::string& curve) {
    for (std::size_t v = 0; v < script.transforms.size(); ++v) {
      if (script.transforms[v].curve == curve) return std::optional(v);
    }
    return std::optional<std::size_t>();
  };

  CertificateOutcome out;
  out.surface = s.name;
  out.lambda = lambda;
  out.lambda_overridden = overridden;
  out.chart = chart;
  out.variables = variables;

  std::vector<bool> crossed(script.transforms.size(), false);
  for (const ClaimSpec& spec : script.claims) {
    if (spec.anchor.empty()) fail("claim without anchor");
    DerivedClaim d;
    switch (spec.kind) {
      case ClaimKind::kPencil: {
        if (!spec.degree) fail("pencil claim without a degree");
        d.form = AffineForm(pencil_degree_check(s, *spec.degree));
        d.bound = Rational(1) / lambda;
        break;
      }
      case ClaimKind::kCurveRestriction: {
        if (!spec.curve) fail("restriction claim without a curve");
        const CurveClass& c = s.curve(*spec.curve);
        long away = 1;
        if (spec.away_index) {
          away = *spec.away_index;
        } else {
          std::vector<std::string> points = c.plt_points;
          points.insert(points.end(), c.singular_at.begin(),
                        c.singular_at.end());
          for (const std::string& label : points) {
            if (label == script.center) continue;
            away = std::max(away, s.singularity(label).n);
          }
        }
        if (table.has_curve(*spec.curve)) {
          d.form = AffineForm(pair_with_curve(table, antik, *spec.curve));
          if (const auto v = transform_slot(*spec.curve)) {
            d.form.add_term(names[*v], -table.pair(*spec.curve, *spec.curve));
          }
        } else {
          d.form = AffineForm(curve_antik_degree(s, c));
        }
        d.bound = Rational(1) / (lambda * Rational(away));
        break;
      }
      case ClaimKind::kMCap: {
        d.form = AffineForm::variable("m") - m_cap;
        d.bound = Rational(0);
        d.form_text = "m";
        d.bound_text = m_cap.str();
        if (spec.form != "m" || AffineForm::parse(spec.bound) != m_cap) {
          fail("m-cap membership claim does not restate the derived bound");
        }
        d.compare_form = false;
        d.compare_bound = false;
        break;
      }
      case ClaimKind::kMuBound: {
        d.form = mu;
        if (overridden || spec.bound.empty()) {
          d.bound = Rational(1);
        } else {
          d.bound = Rational::parse(spec.bound);
        }
        if (Rational(1) < d.bound) fail("mu bound above 1 certifies nothing");
        d.form_text = mu.str();
        d.bound_text = d.bound.str();
        d.compare_form = !overridden;
        d.compare_bound = false;
        break;
      }
      case ClaimKind::kExceptional: {
        if (!spec.index) fail("exceptional claim without an index");
        consume(*spec.index, "exceptional claim");
        d.form = AffineForm::variable("m", e_weight);
        d.bound = Rational(1) / (lambda * Rational(*spec.index));
        break;
      }
      case ClaimKind::kTransversal: {
        if (!spec.curve) fail("transversal claim without a curve");
        const auto v = transform_slot(*spec.curve);
        if (!v) fail("transversal claim for a curve with no transform");
        if (crossed[*v]) fail("duplicate crossing claim for " + *spec.curve);
        crossed[*v] = true;
        d.form = AffineForm::variable(names[*v], crossing[*v]);
        d.form.add_term("m", e_weight);
        d.bound =
            Rational(1) / (lambda * Rational(script.transforms[*v].meets));
        break;
      }
    }
    if (d.form_text.empty()) d.form_text = d.form.str();
    if (d.bound_text.empty()) d.bound_text = d.bound.str();
    if (d.compare_form && AffineForm::parse(spec.form) != d.form) {
      fail("claim '" + spec.anchor + "' stores form " + spec.form +
           ", derived " + d.form.str());
    }
    if (d.compare_bound && !overridden &&
        Rational::parse(spec.bound) != d.bound) {
      fail("claim '" + spec.anchor + "' stores bound " + spec.bound +
           ", derived " + d.bound.str());
    }

    const AffineCheck check = verify_upper_bound(region, d.form, d.bound);
    ClaimResult result;
    result.anchor = spec.anchor;
    result.form = d.form_text;
    result.bound = d.bound_text;
    result.max_value = check.max_value;
    if (check.holds) {
      result.verdict = Verdict::kPass;
    } else {
      result.verdict =
          spec.expect_divergence ? Verdict::kKnownDivergence : Verdict::kFail;
      result.witness = check.witness;
    }
    out.claims.push_back(result);
  }

  if (!pending.empty()) {
    fail("exceptional point of index " + std::to_string(pending.front()) +
         " has no claim");
  }
  if (!std::all_of(crossed.begin(), crossed.end(), [](bool b) { return b; })) {
    fail("every strict transform needs a crossing claim");
  }

  out.pass = std::none_of(out.claims.begin(), out.claims.end(),
                          [](const ClaimResult& c) {
                            return c.verdict == Verdict::kFail;
                          });
  out.strict_pass = std::all_of(out.claims.begin(), out.claims.end(),
                                [](const ClaimResult& c) {
                                  return c.verdict == Verdict::kPass;
                                });
  if (out.pass) out.delta_bound = lambda;
  return out;
}

}  // namespace wdp
