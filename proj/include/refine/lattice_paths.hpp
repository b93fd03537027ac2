#pragma once

#include <string>
#include <vector>

#include "refine/dpp.hpp"
#include "refine/mpoly.hpp"

namespace refine {

// A path on the directed n x n grid (Cartesian coordinates, column then
// row): Right moves (i,j) -> (i+1,j), Down moves (i,j) -> (i,j-1).
struct LatticePath {
  int start_col = 0;
  int start_row = 0;
  std::string steps;  // over {'R', 'D'}

  friend bool operator==(const LatticePath& a, const LatticePath& b) {
    return a.start_col == b.start_col && a.start_row == b.start_row && a.steps == b.steps;
  }
};

// A family of nonintersecting paths encoding a DPP: path i runs from
// (0, lambda_{i-1} - 1) to (lambda_i, 0) for a strict sequence
// n = lambda_0 > lambda_1 > ... > lambda_t > lambda_{t+1} = 0.
struct PathFamily {
  int n = 0;
  std::vector<LatticePath> paths;

  friend bool operator==(const PathFamily& a, const PathFamily& b) {
    return a.n == b.n && a.paths == b.paths;
  }

  std::string to_json() const;
  static PathFamily from_json(const std::string& text);
};

struct NilpStats {
  int nu = 0;
  int mu = 0;
  int rho1 = 0;
  int rho2 = 0;
};

PathFamily dpp_to_nilp(const Dpp& d);
// Inverse bijection; throws if the family violates the NILP shape.
Dpp nilp_to_dpp(const PathFamily& p);

NilpStats nilp_stats(const PathFamily& p);

void enumerate_nilps(int n, const std::function<void(const PathFamily&)>& yield);

// Weight of the horizontal edge from (col, row) to (col+1, row): x z1 in row
// n-1, x z2 in row n-2, otherwise x at or above the subdiagonal (row >= col)
// and y below it. Vertical edges have weight 1.
MPoly horizontal_edge_weight(int n, int col, int row);

MPoly path_weight(int n, const LatticePath& p);
MPoly family_weight(const PathFamily& p);

// Weighted sum over all paths from (0, j) to (i, 0), by memoized dynamic
// programming over grid points.
MPoly path_weight_sum_bruteforce(int n, int j, int i);
// The same sum from the closed-form binomial expressions.
MPoly path_weight_sum_closed(int n, int j, int i);

}  // namespace refine
