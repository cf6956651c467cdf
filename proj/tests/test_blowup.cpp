#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "wdp/blowup.hpp"

using wdp::BlowupChart;
using wdp::Rational;
using wdp::SingularityType;

TEST_SUITE("blowup") {

TEST_CASE("type normalization") {
  CHECK(wdp::normalize_type({5, 2, 2}) == SingularityType{5, 1, 1});
  CHECK(wdp::normalize_type({7, 2, 3}) == SingularityType{7, 1, 3});
  CHECK(wdp::normalize_type({3, 2, 2}) == SingularityType{3, 1, 1});
  CHECK(wdp::normalize_type({2, 1, 1}) == SingularityType{2, 1, 1});
  // Negative entries reduce into the canonical residue range first.
  CHECK(wdp::normalize_type({3, 1, -1}) == SingularityType{3, 1, 2});
  CHECK_THROWS_AS(wdp::normalize_type({4, 2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(wdp::normalize_type({0, 1, 1}), std::invalid_argument);
}

TEST_CASE("weighted blow-up charts at the certificate centers") {
  struct Row {
    SingularityType center;
    Rational discrepancy;
    Rational e_self;
    std::vector<SingularityType> residual;
  };
  const Row rows[] = {
      {{7, 3, 5}, {1, 7}, {-7, 15}, {{3, 1, 1}, {5, 1, 1}}},
      {{5, 3, 4}, {2, 5}, {-5, 12}, {{3, 1, 1}, {4, 1, 1}}},
      {{19, 2, 3}, {-14, 19}, {-19, 6}, {{2, 1, 1}, {3, 1, 1}}},
      {{25, 2, 3}, {-4, 5}, {-25, 6}, {{2, 1, 1}, {3, 1, 1}}},
      {{37, 2, 3}, {-32, 37}, {-37, 6}, {{2, 1, 1}, {3, 1, 1}}},
      {{55, 2, 3}, {-10, 11}, {-55, 6}, {{2, 1, 1}, {3, 1, 1}}},
  };
  for (const Row& row : rows) {
    CAPTURE(row.center.n);
    const BlowupChart chart = wdp::blowup_chart(row.center);
    CHECK(chart.center == row.center);
    CHECK(chart.discrepancy == row.discrepancy);
    CHECK(chart.exceptional_self == row.e_self);
    CHECK(chart.exceptional_singularities == row.residual);
  }
}

TEST_CASE("index one points drop out of the chart") {
  const BlowupChart chart = wdp::blowup_chart({3, 1, 1});
  CHECK(chart.discrepancy == Rational(-1, 3));
  CHECK(chart.exceptional_self == Rational(-3));
  CHECK(chart.exceptional_singularities.empty());
  const BlowupChart mixed = wdp::blowup_chart({5, 1, 2});
  CHECK(mixed.discrepancy == Rational(-2, 5));
  CHECK(mixed.exceptional_self == Rational(-5, 2));
  REQUIRE(mixed.exceptional_singularities.size() == 1);
  CHECK(mixed.exceptional_singularities[0] == SingularityType{2, 1, 1});
}

TEST_CASE("chart construction rejects degenerate input") {
  CHECK_THROWS_AS(wdp::blowup_chart({1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(wdp::blowup_chart({6, 2, 1}), std::invalid_argument);
}

TEST_CASE("transform coefficients of curve germs") {
  const SingularityType t{19, 2, 3};
  CHECK(wdp::transform_coefficient({{1, 0}}, t) == Rational(2, 19));
  CHECK(wdp::transform_coefficient({{0, 1}}, t) == Rational(3, 19));
  CHECK(wdp::transform_coefficient({{3, 0}, {0, 2}}, t) == Rational(6, 19));
  CHECK(wdp::transform_coefficient({{1, 1}, {0, 4}}, t) == Rational(5, 19));
  CHECK_THROWS_AS(wdp::transform_coefficient({}, t), std::invalid_argument);
  CHECK_THROWS_AS(wdp::transform_coefficient({{-1, 0}}, t),
                  std::invalid_argument);
}

TEST_CASE("log canonical thresholds of quasi-homogeneous germs") {
  CHECK(wdp::lct_germ(1, 7, 15) == Rational(8, 15));
  CHECK(wdp::lct_germ(3, 4, 12) == Rational(7, 12));
  CHECK(wdp::lct_germ(3, 5, 6) == Rational(1));
  CHECK(wdp::lct_germ(1, 1, 2) == Rational(1));
  CHECK(wdp::lct_germ(2, 3, 12) == Rational(5, 12));
  CHECK_THROWS_AS(wdp::lct_germ(0, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(wdp::lct_germ(1, 1, 0), std::invalid_argument);
}

}  // TEST_SUITE
