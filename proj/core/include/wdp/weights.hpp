#pragma once

#include <array>
#include <vector>

#include "wdp/rational.hpp"

namespace wdp {

// Weight system of a degree-d hypersurface in a weighted projective
// 3-space P(w0, w1, w2, w3), with weights in nondecreasing order.
struct Quintuple {
  std::array<long, 4> w{};
  long d = 0;
};

// Throws unless all weights are positive, nondecreasing, and d >= 1.
void validate(const Quintuple& q);

// Amplitude I = w0 + w1 + w2 + w3 - d of the anticanonical class O(I).
long amplitude(const Quintuple& q);

// Well-formedness of the ambient space relative to the hypersurface: every
// triple of weights is coprime and every pair gcd divides the degree.
bool is_well_formed(const Quintuple& q);

// Strict sign obstruction I > 3*w0; a hypersurface satisfying it cannot be
// K-semistable, so every shipped surface must fail it.
bool gmsy_obstructed(const Quintuple& q);

// Anticanonical self-intersection I^2 * d / (w0*w1*w2*w3).
// Throws when I <= 0 (non-Fano input).
Rational anticanonical_selfint(const Quintuple& q);

// Number of monomials of weighted degree m (0 for negative m).
long long count_monomials(const Quintuple& q, long m);

// Dimension of the degree-m graded piece of the hypersurface coordinate
// ring: count(m) - count(m - d).
long long section_dim(const Quintuple& q, long m);

// Coefficients 0..upto of the Hilbert series (1 - t^d) / prod(1 - t^{w_i}).
std::vector<long long> hilbert_coefficients(const Quintuple& q, long upto);

// Incremental monomial-count table, for callers that evaluate many degrees
// against one weight system.
class MonomialCounter {
 public:
  explicit MonomialCounter(const Quintuple& q);

  long long count(long m);
  long long section_dim(long m);

 private:
  void grow(long m);

  Quintuple q_;
  std::vector<long long> table_;
};

}  // namespace wdp
