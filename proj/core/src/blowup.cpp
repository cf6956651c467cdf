#include "wdp/blowup.hpp"

#include <numeric>
#include <stdexcept>

namespace wdp {

namespace {

void check_type(const SingularityType& t) {
  if (t.n < 1) throw std::invalid_argument("blowup: quotient order must be positive");
  const long a = ((t.a % t.n) + t.n) % t.n;
  const long b = ((t.b % t.n) + t.n) % t.n;
  if (t.n == 1) return;
  if (a == 0 || b == 0 || std::gcd(a, t.n) != 1 || std::gcd(b, t.n) != 1) {
    throw std::invalid_argument("blowup: weights must be coprime to the order");
  }
}

}  // namespace

SingularityType normalize_type(const SingularityType& t) {
  check_type(t);
  const long n = t.n;
  if (n == 1) return {1, 0, 0};
  const auto norm = [&](long v) { return ((v % n) + n) % n; };
  long best_a = -1, best_b = -1;
  for (long u = 1; u < n; ++u) {
    if (std::gcd(u, n) != 1) continue;
    long ua = norm(u * t.a);
    long ub = norm(u * t.b);
    if (ua > ub) std::swap(ua, ub);
    if (best_a < 0 || ua < best_a || (ua == best_a && ub < best_b)) {
      best_a = ua;
      best_b = ub;
    }
  }
  return {n, best_a, best_b};
}

BlowupChart blowup_chart(const SingularityType& t) {
  check_type(t);
  if (t.n < 2) throw std::invalid_argument("blowup: nothing to blow up at a smooth point");
  BlowupChart chart;
  chart.center = t;
  chart.discrepancy = Rational(t.a + t.b - t.n, t.n);
  chart.exceptional_self = Rational(-t.n, t.a * t.b);
  const auto add = [&](long order, long wa, long wb) {
    if (order <= 1) return;
    chart.exceptional_singularities.push_back(
        normalize_type({order, ((wa % order) + order) % order,
                        ((wb % order) + order) % order}));
  };
  add(t.a, t.n, -t.b);
  add(t.b, -t.a, t.n);
  return chart;
}

Rational transform_coefficient(const std::vector<std::array<long, 2>>& germ,
                               const SingularityType& t) {
  check_type(t);
  if (germ.empty()) throw std::invalid_argument("blowup: empty curve germ");
  bool first = true;
  Rational best;
  for (const auto& mono : germ) {
    if (mono[0] < 0 || mono[1] < 0) {
      throw std::invalid_argument("blowup: negative germ exponent");
    }
    const Rational value(mono[0] * t.a + mono[1] * t.b, t.n);
    if (first || value < best) {
      best = value;
      first = false;
    }
  }
  return best;
}

Rational lct_germ(long w1, long w2, long delta) {
  if (w1 < 1 || w2 < 1 || delta < 1) {
    throw std::invalid_argument("lct: weights and degree must be positive");
  }
  return min(Rational(1), Rational(w1 + w2, delta));
}

}  // namespace wdp
