#include <doctest.h>

#include <stdexcept>

#include "wdp/defaults.hpp"
#include "wdp/surface.hpp"

using wdp::Rational;
using wdp::SurfaceModel;

TEST_SUITE("surface") {

TEST_CASE("every builtin surface validates") {
  for (const std::string& name : wdp::builtin_surface_names()) {
    const SurfaceModel s = wdp::load_surface(name);
    CHECK_NOTHROW(s.validate());
    CHECK(s.name == name);
  }
  CHECK(wdp::builtin_surface_names().size() == 7);
}

TEST_CASE("ambient pairing of hyperplane classes") {
  const SurfaceModel s = wdp::load_surface("s45");
  CHECK(wdp::ambient_pairing(s.weights, 7, 7) == Rational(21, 190));
  CHECK(wdp::ambient_pairing(s.weights, 6, 6) == Rational(54, 665));
  CHECK(wdp::ambient_pairing(s.weights, 7, 6) == Rational(9, 95));
  CHECK(wdp::ambient_pairing(s.weights, 10, 6) == Rational(18, 133));
}

TEST_CASE("coordinate restriction uses the complementary weights") {
  const SurfaceModel s = wdp::load_surface("s45");
  // {x = z = 0} is the line spanned by y and t, of weights 10 and 19.
  CHECK(wdp::coordinate_restriction_degree(s.weights, 0, 2, 6) ==
        Rational(6, 190));
  CHECK(wdp::coordinate_restriction_degree(s.weights, 0, 2, 7) ==
        Rational(7, 190));
  CHECK_THROWS_AS(wdp::coordinate_restriction_degree(s.weights, 1, 1, 6),
                  std::invalid_argument);
}

TEST_CASE("anticanonical degrees of the declared curves") {
  const SurfaceModel s45 = wdp::load_surface("s45");
  CHECK(wdp::curve_antik_degree(s45, s45.curve("C_x")) == Rational(9, 95));
  CHECK(wdp::curve_antik_degree(s45, s45.curve("C_y")) == Rational(18, 133));
  CHECK(wdp::curve_antik_degree(s45, s45.curve("L_xz")) == Rational(3, 95));
  CHECK(wdp::curve_antik_degree(s45, s45.curve("R_x")) == Rational(6, 95));

  const SurfaceModel s81 = wdp::load_surface("s81");
  CHECK(wdp::curve_antik_degree(s81, s81.curve("L_xz")) == Rational(4, 333));
  CHECK(wdp::curve_antik_degree(s81, s81.curve("R_x")) == Rational(8, 333));

  const SurfaceModel s117 = wdp::load_surface("s117");
  CHECK(wdp::curve_antik_degree(s117, s117.curve("L_xz")) == Rational(1, 143));
  CHECK(wdp::curve_antik_degree(s117, s117.curve("R_x")) == Rational(2, 143));
}

TEST_CASE("axis self-intersections by orbifold adjunction") {
  const SurfaceModel s45 = wdp::load_surface("s45");
  CHECK(wdp::selfint_by_adjunction(s45, s45.curve("L_xz")) ==
        Rational(-23, 190));
  const SurfaceModel s81 = wdp::load_surface("s81");
  CHECK(wdp::selfint_by_adjunction(s81, s81.curve("L_xz")) ==
        Rational(-47, 666));
  const SurfaceModel s117 = wdp::load_surface("s117");
  CHECK(wdp::selfint_by_adjunction(s117, s117.curve("L_xz")) ==
        Rational(-71, 1430));
  // Adjunction is refused across a singular point of the curve itself.
  CHECK_THROWS_AS(wdp::selfint_by_adjunction(s45, s45.curve("R_x")),
                  std::invalid_argument);
  CHECK_THROWS_AS(wdp::selfint_by_adjunction(s45, s45.curve("C_x")),
                  std::invalid_argument);
}

TEST_CASE("two-curve intersection tables") {
  struct Row {
    const char* name;
    Rational ll, rr, lr, kl, kr;
  };
  const Row rows[] = {
      {"s45", {-23, 190}, {-8, 95}, {3, 19}, {3, 95}, {6, 95}},
      {"s81", {-47, 666}, {-20, 333}, {3, 37}, {4, 333}, {8, 333}},
      {"s117", {-71, 1430}, {-32, 715}, {3, 55}, {1, 143}, {2, 143}},
  };
  for (const Row& row : rows) {
    const SurfaceModel s = wdp::load_surface(row.name);
    const wdp::IntersectionTable t = wdp::complete_table(s);
    REQUIRE(t.basis().size() == 2);
    CHECK(t.has_curve("L_xz"));
    CHECK(t.has_curve("R_x"));
    CHECK(!t.has_curve("C_x"));
    CHECK(t.pair("L_xz", "L_xz") == row.ll);
    CHECK(t.pair("R_x", "R_x") == row.rr);
    CHECK(t.pair("L_xz", "R_x") == row.lr);
    CHECK(t.pair("R_x", "L_xz") == row.lr);
    CHECK(t.antik("L_xz") == row.kl);
    CHECK(t.antik("R_x") == row.kr);
    CHECK_THROWS_AS(t.pair("L_xz", "C_x"), std::invalid_argument);
  }
}

TEST_CASE("table rows reproduce the whole hyperplane class") {
  // C_x = L_xz + R_x, so pairing anything against C_x must match the
  // ambient formula for O(7).
  const SurfaceModel s = wdp::load_surface("s81");
  const wdp::IntersectionTable t = wdp::complete_table(s);
  const Rational cx_l = t.pair("L_xz", "L_xz") + t.pair("L_xz", "R_x");
  const Rational cx_r = t.pair("L_xz", "R_x") + t.pair("R_x", "R_x");
  CHECK(cx_l == wdp::coordinate_restriction_degree(s.weights, 0, 2, 7));
  CHECK(cx_l + cx_r == wdp::ambient_pairing(s.weights, 7, 7));
  CHECK(t.antik("L_xz") + t.antik("R_x") ==
        wdp::ambient_pairing(s.weights, 7, 8));
}

TEST_CASE("one-curve tables for the proportional generators") {
  struct Row {
    const char* name;
    const char* curve;
    Rational self, antik, mu;
  };
  const Row rows[] = {
      {"s15", "C_x", {1, 7}, {1, 7}, {1, 1}},
      {"s12", "C_x", {2, 5}, {2, 5}, {1, 1}},
      {"s64", "C_x", {14, 285}, {6, 95}, {7, 9}},
      {"s82", "C_x", {14, 475}, {4, 95}, {7, 10}},
  };
  for (const Row& row : rows) {
    const SurfaceModel s = wdp::load_surface(row.name);
    const wdp::IntersectionTable t = wdp::complete_table(s);
    REQUIRE(t.basis() == std::vector<std::string>{row.curve});
    CHECK(t.pair(row.curve, row.curve) == row.self);
    CHECK(t.antik(row.curve) == row.antik);
    REQUIRE(s.curve(row.curve).mu.has_value());
    CHECK(*s.curve(row.curve).mu == row.mu);
    // C ~ mu * (-K) forces C^2 = mu * (-K.C) and -K.C = mu * (-K)^2.
    CHECK(row.self == row.mu * row.antik);
    CHECK(row.antik == row.mu * wdp::anticanonical_selfint(s.weights));
  }
}

TEST_CASE("basis curves follow the relation when present") {
  const SurfaceModel s45 = wdp::load_surface("s45");
  CHECK(s45.basis_curves() == std::vector<std::string>{"L_xz", "R_x"});
  const SurfaceModel s15 = wdp::load_surface("s15");
  CHECK(s15.basis_curves() == std::vector<std::string>{"C_x"});
}

TEST_CASE("lookup of unknown labels throws") {
  const SurfaceModel s = wdp::load_surface("s45");
  CHECK_THROWS_AS(s.curve("C_q"), std::invalid_argument);
  CHECK_THROWS_AS(s.singularity("O_q"), std::invalid_argument);
  CHECK(!s.has_curve("C_q"));
  CHECK(s.has_curve("L_xz"));
  CHECK(s.has_singularity("O_t"));
}

TEST_CASE("validation rejects a monomial of the wrong degree") {
  SurfaceModel s = wdp::load_surface("s45");
  s.monomials.push_back({1, 0, 0, 0});
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
}

TEST_CASE("validation rejects a coordinate line off the surface") {
  SurfaceModel s = wdp::load_surface("s45");
  for (auto& c : s.curves) {
    // {y = t = 0} misses the monomial z^3, so the line is not contained.
    if (c.label == "L_xz") c.coordinate_pair = std::make_pair(1, 3);
  }
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
}

TEST_CASE("validation rejects a wrong singularity type") {
  SurfaceModel s = wdp::load_surface("s45");
  for (auto& q : s.singularities) {
    if (q.label == "O_t") q.a = 5;
  }
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
}

TEST_CASE("type equivalence up to unit scaling and swap") {
  CHECK(wdp::types_equivalent(5, 1, 2, 2, 4));
  CHECK(wdp::types_equivalent(5, 1, 2, 1, 3));
  CHECK(wdp::types_equivalent(7, 2, 3, 3, 2));
  CHECK(!wdp::types_equivalent(7, 1, 2, 1, 3));
  CHECK(wdp::types_equivalent(2, 1, 1, 1, 1));
}

}  // TEST_SUITE
