#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "septope/combinatorics.hpp"
#include "septope/lattice.hpp"

using namespace septope;

TEST_CASE("generators of the cycle configuration") {
  auto g3 = cycle_generators(3);
  REQUIRE(g3.size() == 7);
  CHECK(g3[0] == lattice_point{0, 0, 0});
  CHECK(std::count(g3.begin(), g3.end(), lattice_point{1, -1, 0}) == 1);
  CHECK(std::count(g3.begin(), g3.end(), lattice_point{0, 1, -1}) == 1);
  CHECK(std::count(g3.begin(), g3.end(), lattice_point{-1, 0, 1}) == 1);
  CHECK(std::count(g3.begin(), g3.end(), lattice_point{-1, 1, 0}) == 1);
  CHECK(std::count(g3.begin(), g3.end(), lattice_point{0, -1, 1}) == 1);
  CHECK(std::count(g3.begin(), g3.end(), lattice_point{1, 0, -1}) == 1);
  CHECK(cycle_generators(4).size() == 9);
  for (const auto& g : cycle_generators(5)) {
    int sum = 0;
    for (int c : g) {
      sum += c;
      CHECK(std::abs(c) <= 1);
    }
    CHECK(sum == 0);
  }
}

TEST_CASE("dilate enumeration basics") {
  CHECK(dilate_points(3, 1).size() == 7);
  CHECK(dilate_points(3, 2).size() == 19);
  for (int d : {3, 4, 5, 6}) {
    auto s = dilate_points(d, 0);
    CHECK(s.size() == 1);
    CHECK(s.count(lattice_point(d, 0)) == 1);
  }
  CHECK_THROWS_AS(dilate_points(7, 1), resource_limit_error);
  CHECK_THROWS_AS(dilate_points(3, 7), resource_limit_error);
}

TEST_CASE("hexagonal closed form for d=3") {
  for (int m = 0; m <= 5; ++m) {
    CHECK(count_points(3, m) == Int(3 * m * m + 3 * m + 1));
  }
}

TEST_CASE("central symmetry and monotone dilates") {
  for (int d : {3, 4}) {
    for (int m = 1; m <= 3; ++m) {
      auto pts = dilate_points(d, m);
      for (const auto& p : pts) {
        lattice_point neg(p.size());
        for (size_t i = 0; i < p.size(); ++i) neg[i] = -p[i];
        CHECK(pts.count(neg) == 1);
      }
      auto smaller = dilate_points(d, m - 1);
      for (const auto& p : smaller) CHECK(pts.count(p) == 1);
    }
  }
}

TEST_CASE("LP membership oracle") {
  CHECK(contains(lattice_point{0, 0, 0}, 3, 0));
  CHECK(contains(lattice_point{0, 0, 0}, 3, 2));
  CHECK_FALSE(contains(lattice_point{2, -2, 0}, 3, 1));
  CHECK(contains(lattice_point{2, -2, 0}, 3, 2));
  // sum != 0 is outside the lattice hyperplane entirely
  CHECK_FALSE(contains(lattice_point{1, 0, 0}, 3, 1));
  CHECK_THROWS_AS(contains(lattice_point{0, 0}, 3, 1), std::invalid_argument);
}

TEST_CASE("LP location classifies boundary and interior") {
  // origin is the unique interior point of the reflexive polytope itself
  CHECK(locate_point(lattice_point{0, 0, 0}, 3, 1) == point_location::interior);
  CHECK(locate_point(lattice_point{1, -1, 0}, 3, 1) == point_location::boundary);
  CHECK(locate_point(lattice_point{2, -2, 0}, 3, 2) == point_location::boundary);
  CHECK(locate_point(lattice_point{1, -1, 0}, 3, 2) == point_location::interior);
}

TEST_CASE("IDP cross-check: enumeration equals LP membership") {
  for (int d : {3, 4}) {
    for (int m = 0; m <= 3; ++m) {
      CHECK(count_points(d, m, /*cross_check=*/true) == ehrhart_eval(d, m));
    }
  }
}

TEST_CASE("interior counts realize Ehrhart reciprocity") {
  for (int d : {3, 4}) {
    for (int m = 1; m <= 3; ++m) {
      CHECK(count_interior_points(d, m) == ehrhart_eval(d, m - 1));
    }
  }
}

TEST_CASE("oracle agreement across d and m") {
  for (int d = 3; d <= 6; ++d) {
    for (int m = 0; m <= 5; ++m) {
      CHECK(count_points(d, m) == ehrhart_eval(d, m));
    }
  }
  CHECK(count_points(4, 1) == 9);
  CHECK(count_points(5, 2) == 61);
}
