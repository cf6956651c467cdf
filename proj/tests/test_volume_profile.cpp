#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "wdp/defaults.hpp"
#include "wdp/surface.hpp"
#include "wdp/volume_profile.hpp"
#include "wdp/zariski.hpp"

using wdp::QDivisor;
using wdp::QuadPoly;
using wdp::Rational;
using wdp::SurfaceModel;
using wdp::VolumeProfile;

namespace {

VolumeProfile profile_of(const char* name, const char* curve) {
  const SurfaceModel s = wdp::load_surface(name);
  const wdp::IntersectionTable t = wdp::complete_table(s);
  return wdp::volume_profile(t, QDivisor::anti_canonical(s), curve);
}

void check_shape(const VolumeProfile& p) {
  REQUIRE(!p.chambers.empty());
  CHECK(p.chambers.front().lo == Rational(0));
  CHECK(p.chambers.front().negative.empty());
  CHECK(p.chambers.front().hi == p.nef_end);
  CHECK(p.chambers.back().hi == p.pe_end);
  CHECK(p.volume.domain_start() == Rational(0));
  CHECK(p.volume.domain_end() == p.pe_end);
  CHECK(p.volume.end_value().is_zero());
  for (std::size_t i = 0; i + 1 < p.chambers.size(); ++i) {
    CHECK(p.chambers[i].hi == p.chambers[i + 1].lo);
    // Adjacent chamber polynomials agree where they meet.
    CHECK(p.chambers[i].piece.eval(p.chambers[i].hi) ==
          p.chambers[i + 1].piece.eval(p.chambers[i].hi));
  }
}

}  // namespace

TEST_SUITE("profile") {

TEST_CASE("two-chamber profiles of the relation surfaces") {
  struct Row {
    const char* name;
    const char* direction;
    const char* support;
    Rational nef_end, pe_end;
    QuadPoly nef_piece, far_piece;
    Rational neg_const, neg_slope;
    Rational integral;
  };
  const Row rows[] = {
      {"s45", "L_xz", "R_x", {2, 5}, {6, 7},
       {{54, 665}, {-6, 95}, {-23, 190}}, {{9, 70}, {-3, 10}, {7, 40}},
       {-3, 4}, {15, 8}, {708, 23275}},
      {"s45", "R_x", "L_xz", {1, 5}, {6, 7},
       {{54, 665}, {-12, 95}, {-8, 95}}, {{72, 805}, {-24, 115}, {14, 115}},
       {-6, 23}, {30, 23}, {582, 23275}},
      {"s81", "L_xz", "R_x", {8, 27}, {8, 7},
       {{32, 777}, {-8, 333}, {-47, 666}}, {{16, 315}, {-4, 45}, {7, 180}},
       {-2, 5}, {27, 20}, {24320, 1321677}},
      {"s81", "R_x", "L_xz", {4, 27}, {8, 7},
       {{32, 777}, {-16, 333}, {-20, 333}},
       {{128, 2961}, {-32, 423}, {14, 423}},
       {-8, 47}, {54, 47}, {21632, 1321677}},
      {"s117", "L_xz", "R_x", {10, 39}, {10, 7},
       {{30, 1001}, {-2, 143}, {-71, 1430}}, {{25, 728}, {-5, 104}, {7, 416}},
       {-5, 16}, {39, 32}, {13100, 819819}},
      {"s117", "R_x", "L_xz", {5, 39}, {10, 7},
       {{30, 1001}, {-4, 143}, {-32, 715}},
       {{200, 6461}, {-40, 923}, {14, 923}},
       {-10, 71}, {78, 71}, {12050, 819819}},
  };
  for (const Row& row : rows) {
    CAPTURE(row.name);
    CAPTURE(row.direction);
    const VolumeProfile p = profile_of(row.name, row.direction);
    check_shape(p);
    CHECK(p.direction == row.direction);
    CHECK(p.nef_end == row.nef_end);
    CHECK(p.pe_end == row.pe_end);
    REQUIRE(p.chambers.size() == 2);
    CHECK(p.chambers[0].piece == row.nef_piece);
    CHECK(p.chambers[1].piece == row.far_piece);
    REQUIRE(p.chambers[1].negative.size() == 1);
    const wdp::NegativeCoefficient& n = p.chambers[1].negative[0];
    CHECK(n.curve == row.support);
    CHECK(n.constant == row.neg_const);
    CHECK(n.slope == row.neg_slope);
    CHECK(n.eval(row.nef_end).is_zero());
    CHECK(p.total_integral() == row.integral);
  }
}

TEST_CASE("one-chamber profiles of the proportional generators") {
  struct Row {
    const char* name;
    Rational end;
    QuadPoly piece;
  };
  const Row rows[] = {
      {"s15", {1, 1}, {{1, 7}, {-2, 7}, {1, 7}}},
      {"s12", {1, 1}, {{2, 5}, {-4, 5}, {2, 5}}},
      {"s64", {9, 7}, {{54, 665}, {-12, 95}, {14, 285}}},
      {"s82", {10, 7}, {{8, 133}, {-8, 95}, {14, 475}}},
  };
  for (const Row& row : rows) {
    CAPTURE(row.name);
    const VolumeProfile p = profile_of(row.name, "C_x");
    check_shape(p);
    REQUIRE(p.chambers.size() == 1);
    CHECK(p.nef_end == row.end);
    CHECK(p.pe_end == row.end);
    CHECK(p.chambers[0].piece == row.piece);
  }
}

TEST_CASE("profile values agree with pointwise decompositions") {
  const SurfaceModel s = wdp::load_surface("s45");
  const wdp::IntersectionTable t = wdp::complete_table(s);
  const QDivisor k = QDivisor::anti_canonical(s);
  const VolumeProfile p = wdp::volume_profile(t, k, "L_xz");
  for (const Rational& lambda : {Rational(0), Rational(1, 4), Rational(2, 5),
                                 Rational(3, 5), Rational(4, 5),
                                 Rational(6, 7)}) {
    QDivisor d = k;
    d.add("L_xz", -lambda);
    CHECK(p.volume.eval(lambda) == wdp::zariski(t, d).volume);
  }
  CHECK(p.volume.eval(Rational(3, 5)) == Rational(81, 7000));
  CHECK(p.volume.eval(Rational(2, 5)) == Rational(608, 16625));
}

TEST_CASE("profiles are nonincreasing") {
  for (const char* name : {"s45", "s81", "s117"}) {
    for (const char* curve : {"L_xz", "R_x"}) {
      const VolumeProfile p = profile_of(name, curve);
      Rational prev = p.volume.eval(Rational(0));
      const Rational step = p.pe_end / Rational(16);
      for (int i = 1; i <= 16; ++i) {
        const Rational x = step * Rational(i);
        const Rational value = p.volume.eval(x);
        CHECK(value <= prev);
        prev = value;
      }
      CHECK(prev.is_zero());
    }
  }
}

TEST_CASE("negative coefficients render with their lambda slope") {
  const VolumeProfile p = profile_of("s45", "L_xz");
  REQUIRE(p.chambers.size() == 2);
  CHECK(p.chambers[1].negative[0].str() == "-3/4 + 15/8 lambda");
}

TEST_CASE("profile construction rejects bad directions") {
  const SurfaceModel s = wdp::load_surface("s45");
  const wdp::IntersectionTable t = wdp::complete_table(s);
  const QDivisor k = QDivisor::anti_canonical(s);
  CHECK_THROWS_AS(wdp::volume_profile(t, k, "C_q"), std::invalid_argument);
  QDivisor no_l;
  no_l.add("R_x", Rational(1));
  CHECK_THROWS_AS(wdp::volume_profile(t, no_l, "L_xz"), std::invalid_argument);
}

}  // TEST_SUITE
