#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "refine/lattice_paths.hpp"

using namespace refine;

namespace {

// Explicit path listing between (0, j) and (i, 0); oracle for the DP sum.
MPoly explicit_path_sum(int n, int j, int i) {
  MPoly total;
  std::function<void(int, int, const MPoly&)> walk = [&](int col, int row, const MPoly& w) {
    if (col == i && row == 0) {
      total += w;
      return;
    }
    if (col < i) walk(col + 1, row, w * horizontal_edge_weight(n, col, row));
    if (row > 0) walk(col, row - 1, w);
  };
  walk(0, j, MPoly(1));
  return total;
}

}  // namespace

TEST_CASE("the empty array maps to the single all-Down path") {
  PathFamily fam = dpp_to_nilp(Dpp::empty(3));
  REQUIRE(fam.paths.size() == 1);
  CHECK(fam.paths[0].start_col == 0);
  CHECK(fam.paths[0].start_row == 2);
  CHECK(fam.paths[0].steps == "DD");
  CHECK(nilp_to_dpp(fam) == Dpp::empty(3));
  NilpStats s = nilp_stats(fam);
  CHECK(s.nu == 0);
  CHECK(s.mu == 0);
  CHECK(s.rho1 == 0);
  CHECK(s.rho2 == 0);
}

TEST_CASE("family counts match the array counts") {
  const long long expected[] = {1, 2, 7, 42, 429, 7436};
  for (int n = 1; n <= 6; ++n) {
    long long count = 0;
    enumerate_nilps(n, [&](const PathFamily&) { ++count; });
    CHECK(count == expected[n - 1]);
  }
}

TEST_CASE("bijection round trips and preserves statistics up to order 5") {
  for (int n = 1; n <= 5; ++n)
    enumerate_dpps(n, [&](const Dpp& d) {
      PathFamily fam = dpp_to_nilp(d);
      CHECK(nilp_to_dpp(fam) == d);
      DppStats ds = dpp_stats(d);
      NilpStats ps = nilp_stats(fam);
      CHECK(ps.nu == ds.nu);
      CHECK(ps.mu == ds.mu);
      CHECK(ps.rho1 == ds.rho1);
      CHECK(ps.rho2 == ds.rho2);
    });
}

TEST_CASE("the worked order-6 example maps to a three-path family") {
  Dpp d = Dpp::validate({{6, 6, 6, 5, 2}, {4, 4, 1}, {3}}, 6);
  PathFamily fam = dpp_to_nilp(d);
  REQUIRE(fam.paths.size() == 4);  // three part-carrying paths plus the final all-Down path
  CHECK(fam.paths[0].start_row == 5);
  NilpStats s = nilp_stats(fam);
  CHECK(s.nu == 7);
  CHECK(s.mu == 2);
  CHECK(s.rho1 == 3);
  CHECK(s.rho2 == 2);
  CHECK(nilp_to_dpp(fam) == d);
}

TEST_CASE("malformed families are rejected") {
  PathFamily fam = dpp_to_nilp(Dpp::validate({{3, 3}, {2}}, 3));
  CHECK_NOTHROW(nilp_to_dpp(fam));
  PathFamily bad = fam;
  bad.paths[0].steps = "RRD";  // no longer reaches row 0 correctly
  CHECK_THROWS_AS(nilp_to_dpp(bad), std::invalid_argument);
  PathFamily crossing = fam;
  crossing.paths.pop_back();  // drop the final path: endpoint shape broken
  CHECK_THROWS_AS(nilp_to_dpp(crossing), std::invalid_argument);
}

TEST_CASE("edge weights follow the row rules") {
  const int n = 4;
  MPoly x = MPoly::variable(Var::x), y = MPoly::variable(Var::y);
  CHECK(horizontal_edge_weight(n, 0, 3) == x * MPoly::variable(Var::z1));
  CHECK(horizontal_edge_weight(n, 2, 2) == x * MPoly::variable(Var::z2));
  CHECK(horizontal_edge_weight(n, 0, 1) == x);  // at or above the diagonal
  CHECK(horizontal_edge_weight(n, 1, 1) == x);
  CHECK(horizontal_edge_weight(n, 1, 0) == y);  // below the diagonal
}

TEST_CASE("simple path sums") {
  for (int n = 2; n <= 5; ++n)
    for (int j = 0; j < n; ++j) {
      CHECK(path_weight_sum_bruteforce(n, j, 0) == MPoly(1));
      CHECK(path_weight_sum_closed(n, j, 0) == MPoly(1));
    }
  // n = 3, from (0,1) to (1,0): Right in row 1 (weight x z2) then Down, or
  // Down then Right at (0,0), which sits on the diagonal (weight x)
  MPoly expected = MPoly::variable(Var::x) * MPoly::variable(Var::z2) + MPoly::variable(Var::x);
  CHECK(path_weight_sum_bruteforce(3, 1, 1) == expected);
  CHECK(path_weight_sum_closed(3, 1, 1) == expected);
}

TEST_CASE("closed form equals the dynamic-programming sum for n up to 6") {
  for (int n = 2; n <= 6; ++n)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        CHECK(path_weight_sum_closed(n, j, i) == path_weight_sum_bruteforce(n, j, i));
}

TEST_CASE("dynamic programming equals explicit path listing for n up to 3") {
  for (int n = 1; n <= 3; ++n)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        CHECK(path_weight_sum_bruteforce(n, j, i) == explicit_path_sum(n, j, i));
}

TEST_CASE("family weight multiplies path weights") {
  Dpp d = Dpp::validate({{3, 1}}, 3);
  PathFamily fam = dpp_to_nilp(d);
  MPoly prod(1);
  for (const auto& p : fam.paths) prod *= path_weight(3, p);
  CHECK(family_weight(fam) == prod);
}

TEST_CASE("JSON round trip") {
  enumerate_nilps(4, [&](const PathFamily& fam) {
    CHECK(PathFamily::from_json(fam.to_json()) == fam);
  });
}
