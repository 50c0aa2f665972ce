#include <doctest.h>

#include <numeric>
#include <stdexcept>
#include <string>

#include "qalink/determinant.hpp"
#include "qalink/diagram.hpp"
#include "qalink/slopes.hpp"
#include "qalink/tangle.hpp"

using namespace qalink;

namespace {
const char* kTrefoil = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
const char* kHopf = "X(4,1,3,2) X(2,3,1,4)";

void check_both_routes(const std::string& pd, long long expected) {
  LinkDiagram d = parse_pd(pd);
  CHECK(determinant(d) == Int(expected));
  CHECK(determinant_oracle(d) == Int(expected));
}
}  // namespace

TEST_CASE("pinned links, both routes") {
  check_both_routes(kTrefoil, 3);
  check_both_routes(kHopf, 2);
  check_both_routes("X(1,2,2,1)", 1);  // kinked unknot
  check_both_routes("O", 1);
  check_both_routes("O O", 0);
  check_both_routes(std::string(kTrefoil) + " O", 0);
  // connected diagram of a split link: one strand entirely over the other
  check_both_routes("X(1,4,2,3) X(2,4,1,3)", 0);
}

TEST_CASE("determinant is a mirror invariant") {
  for (const char* pd : {kTrefoil, kHopf}) {
    LinkDiagram d = parse_pd(pd);
    CHECK(determinant(mirror(d)) == determinant(d));
    CHECK(determinant_oracle(mirror(d)) == determinant_oracle(d));
  }
}

TEST_CASE("resolution determinants of the trefoil are additive") {
  LinkDiagram d = parse_pd(kTrefoil);
  Int d0 = determinant(resolve_crossing(d, 0, 0));
  Int d1 = determinant(resolve_crossing(d, 0, 1));
  CHECK(d0 + d1 == 3);
  CHECK(d0 * d1 == 2);  // {1, 2} in some order
}

TEST_CASE("goeritz options never change the value") {
  for (const char* pd : {kTrefoil, kHopf}) {
    LinkDiagram d = parse_pd(pd);
    GoeritzMatrix base = goeritz_matrix(d);
    Int expected = goeritz_det(base);

    GoeritzMatrix swapped = goeritz_matrix(d, {.swap_shading = true, .delete_region = -1});
    CHECK(goeritz_det(swapped) == expected);
    // the two shadings partition the faces: V - E + F = 2 gives F = n + 2
    CHECK(base.n_white_regions + swapped.n_white_regions == d.n_crossings() + 2);

    for (int r = 0; r < base.n_white_regions; ++r) {
      GoeritzMatrix m = goeritz_matrix(d, {.swap_shading = false, .delete_region = r});
      CHECK(m.deleted_region == r);
      CHECK(goeritz_det(m) == expected);
    }
    CHECK_THROWS_AS(goeritz_matrix(d, {.swap_shading = false, .delete_region = 99}),
                    std::invalid_argument);
  }
}

TEST_CASE("goeritz route requires a connected shadow; determinant handles splits") {
  CHECK_THROWS_AS(goeritz_matrix(parse_pd("O O")), std::invalid_argument);
  CHECK_THROWS_AS(goeritz_matrix(parse_pd(std::string(kTrefoil) + " O")),
                  std::invalid_argument);
  CHECK(determinant(parse_pd("O O")) == 0);
  GoeritzMatrix unknot = goeritz_matrix(parse_pd("O"));
  CHECK(unknot.n_white_regions == 1);
  CHECK(unknot.entries.empty());
  CHECK(goeritz_det(unknot) == 1);
}

TEST_CASE("the two routes agree on twisted families") {
  for (long long p = 2; p <= 9; ++p)
    for (long long q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      LinkDiagram d = two_bridge_diagram(make_slope(p, q));
      Int det = determinant(d);
      CHECK(det == Int(p));
      CHECK(determinant_oracle(d) == det);
      CHECK(determinant_oracle(mirror(d)) == det);
    }
}
