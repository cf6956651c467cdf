#include "wdp/basis_bound.hpp"

#include <algorithm>
#include <stdexcept>

#include "wdp/weights.hpp"

namespace wdp {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw std::invalid_argument("basis_bound: " + what);
}

}  // namespace

Rational s_invariant(const VolumeProfile& profile, const Rational& d0_squared) {
  if (!d0_squared.is_positive()) fail("base divisor has nonpositive volume");
  return profile.total_integral() / d0_squared;
}

Rational s_invariant(const IntersectionTable& t, const QDivisor& d0,
                     const std::string& curve) {
  const VolumeProfile profile = volume_profile(t, d0, curve);
  return s_invariant(profile, pair_divisors(t, d0, d0));
}

Rational proportional_s(const Rational& mu) {
  if (!mu.is_positive()) fail("proportionality factor must be positive");
  return Rational(1) / (Rational(3) * mu);
}

FiltrationCounts discrete_filtration(const SurfaceModel& s,
                                     const std::string& curve, long k) {
  if (k <= 0) fail("level k must be positive");
  const CurveClass& c = s.curve(curve);
  if (!c.hyperplane_degree) {
    fail(curve + " is not a coordinate section, vanishing order along it is "
                 "not monomial divisibility");
  }
  const long w = *c.hyperplane_degree;
  if (std::find(s.weights.w.begin(), s.weights.w.end(), w) == s.weights.w.end()) {
    fail(curve + " is not a coordinate section, vanishing order along it is "
                 "not monomial divisibility");
  }

  FiltrationCounts out;
  out.k = k;
  out.weight = w;
  const long degree = k * amplitude(s.weights);
  MonomialCounter counter(s.weights);
  out.r0 = counter.section_dim(degree);
  if (out.r0 <= 0) fail("no sections at the requested level");
  long long total = 0;
  for (long i = 1; i <= degree / w; ++i) {
    const long long rank = counter.section_dim(degree - i * w);
    out.ranks.push_back(rank);
    total += rank;
  }
  out.bound = Rational(total) / (Rational(k) * Rational(out.r0));
  return out;
}

DirectionBound direction_bound(const SurfaceModel& s, const std::string& curve,
                               const std::optional<Rational>& cap) {
  DirectionBound out;
  out.curve = curve;
  const CurveClass& c = s.curve(curve);
  if (c.mu) {
    out.s_value = proportional_s(*c.mu);
    out.method = "proportional";
  } else {
    const IntersectionTable t = complete_table(s);
    out.s_value = s_invariant(t, QDivisor::anti_canonical(s), curve);
    out.method = "profile";
  }
  out.cap = cap;
  out.admissible = !cap || *cap >= out.s_value;
  return out;
}

}  // namespace wdp
