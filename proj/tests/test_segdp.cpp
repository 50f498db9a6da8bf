#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "segclust/segment_dp.hpp"
#include "support/oracles.hpp"

using namespace segclust;

TEST_CASE("segmentation type") {
  Segmentation seg({0, 2, 4});
  CHECK(seg.n() == 4);
  CHECK(seg.num_segments() == 2);
  CHECK(seg.segment(0) == Interval{1, 2});
  CHECK(seg.segment(1) == Interval{3, 4});
  CHECK(seg.change_points() == std::vector<int>{2});

  CHECK_THROWS_AS(Segmentation({1, 4}), std::invalid_argument);
  CHECK_THROWS_AS(Segmentation({0, 3, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Segmentation({0}), std::invalid_argument);
}

TEST_CASE("first pass recovers an exact two-segment split") {
  Signal y({0, 0, 10, 10});
  SegmentDpResult dp = first_pass(y, 2);
  CHECK(dp.cost(2) == doctest::Approx(0.0));
  CHECK(dp.segmentation(2).change_points() == std::vector<int>{2});
  CHECK(dp.cost(1) == doctest::Approx(segmentation_cost(y, Segmentation::single(4))));
}

TEST_CASE("first pass base case is the whole-range cost") {
  testsupport::TestRng rng(5);
  std::vector<double> values = rng.normal_vector(17, 2.0);
  Signal y(values);
  SegmentDpResult dp = first_pass(y, 1);
  CHECK(dp.cost(1) == doctest::Approx(testsupport::naive_cost(values, 0, 16)));
}

TEST_CASE("first pass equals the exhaustive segmentation minimum") {
  testsupport::TestRng rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    int n = rng.uniform_int(5, 10);
    std::vector<double> values = rng.normal_vector(n);
    Signal y(values);
    SegmentDpResult dp = first_pass(y, 5);
    for (int d = 1; d <= 5 && d <= n; ++d) {
      double exhaustive = testsupport::exhaustive_segmentation_min(values, d);
      CHECK(std::abs(dp.cost(d) - exhaustive) <= 1e-9);
      // the backtracked segmentation achieves the table cost
      CHECK(std::abs(segmentation_cost(y, dp.segmentation(d)) - dp.cost(d)) <= 1e-9);
    }
  }
}

TEST_CASE("first pass cost is nonincreasing in d and vanishes at d = n") {
  testsupport::TestRng rng(8);
  std::vector<double> values = rng.normal_vector(9);
  Signal y(values);
  SegmentDpResult dp = first_pass(y, 9);
  for (int d = 2; d <= 9; ++d) CHECK(dp.cost(d) <= dp.cost(d - 1) + 1e-12);
  CHECK(dp.cost(9) == doctest::Approx(0.0));
}

TEST_CASE("first pass tie-breaking keeps the smallest split index") {
  // all-equal data: every 2-split has cost 0; the first cut must win
  Signal y({1, 1, 1, 1});
  SegmentDpResult dp = first_pass(y, 2);
  CHECK(dp.segmentation(2).change_points() == std::vector<int>{1});
}

TEST_CASE("segmentation cost") {
  Signal y({0, 0, 10, 10});
  CHECK(segmentation_cost(y, Segmentation({0, 2, 4})) == doctest::Approx(0.0));
  CHECK(segmentation_cost(y, Segmentation({0, 1, 2, 3, 4})) == doctest::Approx(0.0));
  CHECK(segmentation_cost(y, Segmentation::single(4)) == doctest::Approx(100.0));
  CHECK_THROWS_AS(segmentation_cost(y, Segmentation({0, 2, 5})), std::invalid_argument);
}

TEST_CASE("first pass argument validation") {
  Signal y({1, 2, 3});
  CHECK_THROWS_AS(first_pass(y, 0), std::invalid_argument);
  CHECK_THROWS_AS(first_pass(y, 4), std::invalid_argument);
  SegmentDpResult dp = first_pass(y, 2);
  CHECK_THROWS_AS(dp.cost(3), std::out_of_range);
  CHECK_THROWS_AS(dp.cost(2, 1), std::out_of_range);
}
