#include <doctest.h>

#include <cstdlib>
#include <stdexcept>

#include "wdp/basis_bound.hpp"
#include "wdp/defaults.hpp"
#include "wdp/surface.hpp"
#include "wdp/volume_profile.hpp"
#include "wdp/zariski.hpp"

using wdp::QDivisor;
using wdp::Rational;
using wdp::SurfaceModel;

namespace {

double abs_diff(const Rational& a, const Rational& b) {
  return std::abs((a - b).to_double());
}

}  // namespace

TEST_SUITE("basis") {

TEST_CASE("proportional closed form") {
  CHECK(wdp::proportional_s(Rational(1)) == Rational(1, 3));
  CHECK(wdp::proportional_s(Rational(7, 9)) == Rational(3, 7));
  CHECK(wdp::proportional_s(Rational(7, 10)) == Rational(10, 21));
  CHECK_THROWS_AS(wdp::proportional_s(Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(wdp::proportional_s(Rational(-1, 2)), std::invalid_argument);
}

TEST_CASE("expected vanishing orders along the basis directions") {
  struct Row {
    const char* name;
    Rational s_l, s_r;
  };
  const Row rows[] = {
      {"s45", {118, 315}, {97, 315}},
      {"s81", {760, 1701}, {676, 1701}},
      {"s117", {1310, 2457}, {1205, 2457}},
  };
  for (const Row& row : rows) {
    const SurfaceModel s = wdp::load_surface(row.name);
    const wdp::IntersectionTable t = wdp::complete_table(s);
    const QDivisor k = QDivisor::anti_canonical(s);
    CHECK(wdp::s_invariant(t, k, "L_xz") == row.s_l);
    CHECK(wdp::s_invariant(t, k, "R_x") == row.s_r);
    // The profile overload matches the table overload.
    const wdp::VolumeProfile p = wdp::volume_profile(t, k, "L_xz");
    CHECK(wdp::s_invariant(p, wdp::anticanonical_selfint(s.weights)) ==
          row.s_l);
  }
}

TEST_CASE("proportional directions agree with the profile integral") {
  for (const char* name : {"s15", "s12", "s64", "s82"}) {
    const SurfaceModel s = wdp::load_surface(name);
    const wdp::IntersectionTable t = wdp::complete_table(s);
    const QDivisor k = QDivisor::anti_canonical(s);
    const Rational mu = *s.curve("C_x").mu;
    CHECK(wdp::s_invariant(t, k, "C_x") == wdp::proportional_s(mu));
  }
}

TEST_CASE("discrete filtration ladder for the smooth-weight surface") {
  const SurfaceModel s = wdp::load_surface("s15");
  struct Row {
    long k;
    Rational bound;
    long long r0;
  };
  const Row rows[] = {
      {60, {1731, 5240}, 262},
      {150, {40241, 121425}, 1619},
      {300, {214369, 645100}, 6451},
  };
  for (const Row& row : rows) {
    const wdp::FiltrationCounts f = wdp::discrete_filtration(s, "C_x", row.k);
    CHECK(f.k == row.k);
    CHECK(f.weight == 1);
    CHECK(f.r0 == row.r0);
    CHECK(f.bound == row.bound);
    CHECK(f.termination_index() == row.k);
    for (std::size_t i = 0; i + 1 < f.ranks.size(); ++i) {
      CHECK(f.ranks[i] >= f.ranks[i + 1]);
    }
  }
  // The ladder converges to s(C_x) = 1/3.
  const wdp::FiltrationCounts f300 = wdp::discrete_filtration(s, "C_x", 300);
  CHECK(abs_diff(f300.bound, Rational(1, 3)) < 0.02);
}

TEST_CASE("discrete filtration at a composite weight") {
  const SurfaceModel s = wdp::load_surface("s64");
  const wdp::FiltrationCounts f = wdp::discrete_filtration(s, "C_x", 96);
  CHECK(f.weight == 7);
  CHECK(f.r0 == wdp::section_dim(s.weights, 864));
  CHECK(f.termination_index() == 123);
  REQUIRE(f.ranks.size() == 123);
  CHECK(f.ranks[0] == wdp::section_dim(s.weights, 857));
  CHECK(f.ranks[122] == wdp::section_dim(s.weights, 3));
  CHECK(abs_diff(f.bound, Rational(3, 7)) < 0.05);
}

TEST_CASE("filtration input validation") {
  const SurfaceModel s45 = wdp::load_surface("s45");
  CHECK_THROWS_AS(wdp::discrete_filtration(s45, "L_xz", 10),
                  std::invalid_argument);
  CHECK_THROWS_AS(wdp::discrete_filtration(s45, "R_x", 10),
                  std::invalid_argument);
  const SurfaceModel s15 = wdp::load_surface("s15");
  CHECK_THROWS_AS(wdp::discrete_filtration(s15, "C_x", 0),
                  std::invalid_argument);
}

TEST_CASE("admissibility of certificate caps") {
  struct Row {
    const char* name;
    const char* curve;
    Rational cap;
    Rational s;
    const char* method;
    bool admissible;
  };
  const Row rows[] = {
      {"s15", "C_x", {8, 21}, {1, 3}, "proportional", true},
      {"s12", "C_x", {8, 21}, {1, 3}, "proportional", true},
      {"s64", "C_x", {1, 2}, {3, 7}, "proportional", true},
      {"s82", "C_x", {1, 2}, {10, 21}, "proportional", true},
      {"s45", "L_xz", {2, 5}, {118, 315}, "profile", true},
      {"s45", "R_x", {1, 3}, {97, 315}, "profile", true},
      {"s81", "L_xz", {1, 2}, {760, 1701}, "profile", true},
      {"s81", "R_x", {1, 5}, {676, 1701}, "profile", false},
      {"s117", "L_xz", {11, 20}, {1310, 2457}, "profile", true},
      {"s117", "R_x", {12, 25}, {1205, 2457}, "profile", false},
  };
  for (const Row& row : rows) {
    CAPTURE(row.name);
    CAPTURE(row.curve);
    const SurfaceModel s = wdp::load_surface(row.name);
    const wdp::DirectionBound b = wdp::direction_bound(s, row.curve, row.cap);
    CHECK(b.curve == row.curve);
    CHECK(b.s_value == row.s);
    CHECK(b.method == row.method);
    REQUIRE(b.cap.has_value());
    CHECK(*b.cap == row.cap);
    CHECK(b.admissible == row.admissible);
  }
}

TEST_CASE("a missing cap leaves the direction admissible") {
  const SurfaceModel s = wdp::load_surface("s45");
  const wdp::DirectionBound b = wdp::direction_bound(s, "L_xz", {});
  CHECK(b.s_value == Rational(118, 315));
  CHECK(!b.cap.has_value());
  CHECK(b.admissible);
}

}  // TEST_SUITE
