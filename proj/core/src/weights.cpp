#include "wdp/weights.hpp"

#include <numeric>
#include <stdexcept>

namespace wdp {

void validate(const Quintuple& q) {
  if (q.d < 1) throw std::invalid_argument("weights: degree must be positive");
  for (int i = 0; i < 4; ++i) {
    if (q.w[i] < 1) throw std::invalid_argument("weights: weights must be positive");
  }
  for (int i = 0; i + 1 < 4; ++i) {
    if (q.w[i] > q.w[i + 1]) {
      throw std::invalid_argument("weights: weights must be nondecreasing");
    }
  }
}

long amplitude(const Quintuple& q) {
  return q.w[0] + q.w[1] + q.w[2] + q.w[3] - q.d;
}

bool is_well_formed(const Quintuple& q) {
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      for (int k = j + 1; k < 4; ++k) {
        long g = std::gcd(std::gcd(q.w[i], q.w[j]), q.w[k]);
        if (g != 1) return false;
      }
      if (q.d % std::gcd(q.w[i], q.w[j]) != 0) return false;
    }
  }
  return true;
}

bool gmsy_obstructed(const Quintuple& q) { return amplitude(q) > 3 * q.w[0]; }

Rational anticanonical_selfint(const Quintuple& q) {
  validate(q);
  const long I = amplitude(q);
  if (I <= 0) throw std::invalid_argument("weights: non-Fano input (amplitude <= 0)");
  Rational num(I);
  num *= Rational(I);
  num *= Rational(q.d);
  Rational den(q.w[0]);
  den *= Rational(q.w[1]);
  den *= Rational(q.w[2]);
  den *= Rational(q.w[3]);
  return num / den;
}

long long count_monomials(const Quintuple& q, long m) {
  if (m < 0) return 0;
  MonomialCounter counter(q);
  return counter.count(m);
}

long long section_dim(const Quintuple& q, long m) {
  return count_monomials(q, m) - count_monomials(q, m - q.d);
}

std::vector<long long> hilbert_coefficients(const Quintuple& q, long upto) {
  validate(q);
  if (upto < 0) throw std::invalid_argument("weights: negative series cutoff");
  // Start from the numerator 1 - t^d, then divide by each factor 1 - t^w,
  // which as a series operation is the prefix recurrence c[j] += c[j - w].
  std::vector<long long> c(static_cast<std::size_t>(upto) + 1, 0);
  c[0] = 1;
  if (q.d <= upto) c[static_cast<std::size_t>(q.d)] -= 1;
  for (long w : q.w) {
    for (long j = w; j <= upto; ++j) {
      c[static_cast<std::size_t>(j)] += c[static_cast<std::size_t>(j - w)];
    }
  }
  return c;
}

MonomialCounter::MonomialCounter(const Quintuple& q) : q_(q) {
  validate(q);
  table_.assign(1, 1);
}

void MonomialCounter::grow(long m) {
  if (m < static_cast<long>(table_.size())) return;
  // Rebuild the standard coin-counting DP up to m. Rebuilding keeps the
  // recurrence order correct (weights applied one at a time over the whole
  // range); the table sizes involved are tiny.
  std::vector<long long> ways(static_cast<std::size_t>(m) + 1, 0);
  ways[0] = 1;
  for (long w : q_.w) {
    for (long j = w; j <= m; ++j) {
      ways[static_cast<std::size_t>(j)] += ways[static_cast<std::size_t>(j - w)];
    }
  }
  table_ = std::move(ways);
}

long long MonomialCounter::count(long m) {
  if (m < 0) return 0;
  grow(m);
  return table_[static_cast<std::size_t>(m)];
}

long long MonomialCounter::section_dim(long m) {
  return count(m) - count(m - q_.d);
}

}  // namespace wdp
