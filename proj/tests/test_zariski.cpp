#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "wdp/defaults.hpp"
#include "wdp/surface.hpp"
#include "wdp/zariski.hpp"

using wdp::QDivisor;
using wdp::Rational;
using wdp::SurfaceModel;
using wdp::ZariskiResult;

namespace {

void check_invariants(const wdp::IntersectionTable& t, const QDivisor& d,
                      const ZariskiResult& z) {
  REQUIRE(z.pseudoeffective);
  // Decomposition recombines to the input.
  for (const std::string& c : t.basis()) {
    Rational n(0);
    const auto it = z.negative_part.find(c);
    if (it != z.negative_part.end()) n = it->second;
    CHECK(z.nef_part.coeff(c) + n == d.coeff(c));
    CHECK(!n.is_negative());
  }
  // Nef against every basis curve, orthogonal to the support.
  for (const std::string& c : t.basis()) {
    const Rational pc = wdp::pair_with_curve(t, z.nef_part, c);
    CHECK(!pc.is_negative());
  }
  for (const std::string& c : z.negative_support) {
    CHECK(wdp::pair_with_curve(t, z.nef_part, c).is_zero());
  }
  for (const auto& [label, coeff] : z.negative_part) {
    CHECK(coeff.is_positive());
  }
  // Support Gram matrix is negative definite.
  if (z.negative_support.size() == 1) {
    CHECK(t.pair(z.negative_support[0], z.negative_support[0]).is_negative());
  } else if (z.negative_support.size() == 2) {
    const std::string& a = z.negative_support[0];
    const std::string& b = z.negative_support[1];
    CHECK(t.pair(a, a).is_negative());
    CHECK(t.pair(a, a) * t.pair(b, b) - t.pair(a, b) * t.pair(a, b) >
          Rational(0));
  }
  // Volume is the self-intersection of the nef part.
  CHECK(z.volume == wdp::pair_divisors(t, z.nef_part, z.nef_part));
  CHECK(!z.volume.is_negative());
}

}  // namespace

TEST_SUITE("zariski") {

TEST_CASE("anticanonical divisor in the curve basis") {
  const SurfaceModel s = wdp::load_surface("s45");
  const QDivisor k = QDivisor::anti_canonical(s);
  CHECK(k.coeff("L_xz") == Rational(6, 7));
  CHECK(k.coeff("R_x") == Rational(6, 7));
  const SurfaceModel s15 = wdp::load_surface("s15");
  CHECK(QDivisor::anti_canonical(s15).coeff("C_x") == Rational(1));
  const SurfaceModel s64 = wdp::load_surface("s64");
  CHECK(QDivisor::anti_canonical(s64).coeff("C_x") == Rational(9, 7));
}

TEST_CASE("anticanonical divisor is nef with the expected volume") {
  for (const std::string& name : wdp::builtin_surface_names()) {
    const SurfaceModel s = wdp::load_surface(name);
    const wdp::IntersectionTable t = wdp::complete_table(s);
    const QDivisor k = QDivisor::anti_canonical(s);
    const ZariskiResult z = wdp::zariski(t, k);
    CHECK(z.pseudoeffective);
    CHECK(z.negative_support.empty());
    CHECK(z.volume == wdp::anticanonical_selfint(s.weights));
  }
}

TEST_CASE("thresholds along the basis directions") {
  struct Row {
    const char* name;
    Rational nef_l, nef_r, pe;
  };
  const Row rows[] = {
      {"s45", {2, 5}, {1, 5}, {6, 7}},
      {"s81", {8, 27}, {4, 27}, {8, 7}},
      {"s117", {10, 39}, {5, 39}, {10, 7}},
  };
  for (const Row& row : rows) {
    const SurfaceModel s = wdp::load_surface(row.name);
    const wdp::IntersectionTable t = wdp::complete_table(s);
    const QDivisor k = QDivisor::anti_canonical(s);
    CHECK(wdp::nef_threshold(t, k, "L_xz") == row.nef_l);
    CHECK(wdp::nef_threshold(t, k, "R_x") == row.nef_r);
    CHECK(wdp::pe_threshold(k, "L_xz") == row.pe);
    CHECK(wdp::pe_threshold(k, "R_x") == row.pe);
  }
}

TEST_CASE("negative part coefficients in the second chamber") {
  struct Row {
    const char* name;
    const char* direction;
    const char* support;
    Rational slope, shift;  // coefficient (slope*lambda - shift)
    Rational sample;
  };
  // Closed forms for the support coefficient of -K - lambda*C.
  const Row rows[] = {
      {"s45", "L_xz", "R_x", {15, 8}, {6, 8}, {3, 5}},
      {"s45", "R_x", "L_xz", {30, 23}, {6, 23}, {1, 2}},
      {"s81", "L_xz", "R_x", {27, 20}, {8, 20}, {1, 1}},
      {"s81", "R_x", "L_xz", {54, 47}, {8, 47}, {1, 2}},
      {"s117", "L_xz", "R_x", {39, 32}, {10, 32}, {1, 1}},
      {"s117", "R_x", "L_xz", {78, 71}, {10, 71}, {1, 2}},
  };
  for (const Row& row : rows) {
    const SurfaceModel s = wdp::load_surface(row.name);
    const wdp::IntersectionTable t = wdp::complete_table(s);
    const QDivisor k = QDivisor::anti_canonical(s);
    const Rational nef_end = wdp::nef_threshold(t, k, row.direction);
    const Rational pe_end = wdp::pe_threshold(k, row.direction);
    const Rational samples[] = {
        nef_end + (row.sample - nef_end) / Rational(7), row.sample,
        pe_end - (pe_end - row.sample) / Rational(9)};
    for (const Rational& lambda : samples) {
      QDivisor d = k;
      d.add(row.direction, -lambda);
      const ZariskiResult z = wdp::zariski(t, d);
      check_invariants(t, d, z);
      REQUIRE(z.negative_support == std::vector<std::string>{row.support});
      CHECK(z.negative_part.at(row.support) ==
            row.slope * lambda - row.shift);
    }
  }
}

TEST_CASE("decomposition is trivial inside the nef chamber") {
  const SurfaceModel s = wdp::load_surface("s117");
  const wdp::IntersectionTable t = wdp::complete_table(s);
  const QDivisor k = QDivisor::anti_canonical(s);
  for (const Rational& lambda :
       {Rational(0), Rational(1, 8), Rational(10, 39)}) {
    QDivisor d = k;
    d.add("L_xz", -lambda);
    const ZariskiResult z = wdp::zariski(t, d);
    check_invariants(t, d, z);
    CHECK(z.negative_support.empty());
    CHECK(z.nef_part == d);
  }
}

TEST_CASE("volume collapses to zero at the pseudoeffective end") {
  const SurfaceModel s = wdp::load_surface("s45");
  const wdp::IntersectionTable t = wdp::complete_table(s);
  QDivisor d = QDivisor::anti_canonical(s);
  d.add("L_xz", Rational(-6, 7));
  const ZariskiResult z = wdp::zariski(t, d);
  check_invariants(t, d, z);
  CHECK(z.volume.is_zero());
}

TEST_CASE("a divisor with a negative coefficient is not pseudoeffective") {
  const SurfaceModel s = wdp::load_surface("s45");
  const wdp::IntersectionTable t = wdp::complete_table(s);
  QDivisor d = QDivisor::anti_canonical(s);
  d.add("L_xz", Rational(-1));
  const ZariskiResult z = wdp::zariski(t, d);
  CHECK(!z.pseudoeffective);
  CHECK(z.volume.is_zero());
}

TEST_CASE("random effective divisors satisfy the decomposition laws") {
  std::mt19937 rng(911);
  std::uniform_int_distribution<int> num(0, 60);
  std::uniform_int_distribution<int> den(1, 12);
  for (const char* name : {"s45", "s81", "s117"}) {
    const SurfaceModel s = wdp::load_surface(name);
    const wdp::IntersectionTable t = wdp::complete_table(s);
    for (int trial = 0; trial < 50; ++trial) {
      QDivisor d;
      d.add("L_xz", Rational(num(rng), den(rng)));
      d.add("R_x", Rational(num(rng), den(rng)));
      const ZariskiResult z = wdp::zariski(t, d);
      check_invariants(t, d, z);
    }
  }
}

TEST_CASE("random multiples of a positive generator stay nef") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> num(0, 60);
  std::uniform_int_distribution<int> den(1, 12);
  const SurfaceModel s = wdp::load_surface("s64");
  const wdp::IntersectionTable t = wdp::complete_table(s);
  for (int trial = 0; trial < 20; ++trial) {
    QDivisor d;
    d.add("C_x", Rational(num(rng), den(rng)));
    const ZariskiResult z = wdp::zariski(t, d);
    check_invariants(t, d, z);
    CHECK(z.negative_support.empty());
  }
}

}  // TEST_SUITE
