#include "refine/lattice_paths.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "refine/numeric.hpp"

namespace refine {

PathFamily dpp_to_nilp(const Dpp& d) {
  const int n = d.order_n();
  const int t = d.num_rows();
  PathFamily fam;
  fam.n = n;
  for (int i = 1; i <= t + 1; ++i) {
    const int lambda_prev = i == 1 ? n : static_cast<int>(d.rows()[i - 2].size());
    const int lambda = i <= t ? static_cast<int>(d.rows()[i - 1].size()) : 0;
    LatticePath p;
    p.start_col = 0;
    p.start_row = lambda_prev - 1;
    int row = p.start_row;
    for (int k = 1; k <= lambda; ++k) {
      const int h = d.part(i, i + k - 1) - 1;
      for (; row > h; --row) p.steps.push_back('D');
      p.steps.push_back('R');
    }
    for (; row > 0; --row) p.steps.push_back('D');
    fam.paths.push_back(std::move(p));
  }
  return fam;
}

Dpp nilp_to_dpp(const PathFamily& fam) {
  const int n = fam.n;
  if (n < 1 || fam.paths.empty()) throw std::invalid_argument("nilp: empty family");
  std::vector<int> lambda{n};  // lambda_0
  std::vector<std::vector<int>> rows;
  std::set<std::pair<int, int>> visited;
  for (std::size_t idx = 0; idx < fam.paths.size(); ++idx) {
    const auto& p = fam.paths[idx];
    if (p.start_col != 0 || p.start_row != lambda.back() - 1)
      throw std::invalid_argument("nilp: path start violates the endpoint shape");
    int col = p.start_col, row = p.start_row;
    std::vector<int> parts;
    if (!visited.insert({col, row}).second)
      throw std::invalid_argument("nilp: intersecting paths");
    for (char s : p.steps) {
      if (s == 'R') {
        parts.push_back(row + 1);
        ++col;
      } else if (s == 'D') {
        --row;
      } else {
        throw std::invalid_argument("nilp: bad step");
      }
      if (col < 0 || col >= n || row < 0 || row >= n)
        throw std::invalid_argument("nilp: path leaves the grid");
      if (!visited.insert({col, row}).second)
        throw std::invalid_argument("nilp: intersecting paths");
    }
    if (row != 0) throw std::invalid_argument("nilp: path does not end in row 0");
    const int end_col = col;
    if (idx + 1 < fam.paths.size()) {
      if (end_col < 1 || end_col >= lambda.back())
        throw std::invalid_argument("nilp: endpoint sequence not strictly decreasing");
      lambda.push_back(end_col);
      rows.push_back(std::move(parts));
    } else {
      if (end_col != 0) throw std::invalid_argument("nilp: last path must end at (0,0)");
      if (!parts.empty()) throw std::invalid_argument("nilp: last path has rightward steps");
    }
  }
  return Dpp::validate(rows, n);
}

NilpStats nilp_stats(const PathFamily& fam) {
  const int n = fam.n;
  NilpStats s;
  for (const auto& p : fam.paths) {
    if (p.start_col == 0 && p.start_row == n - 2) ++s.rho2;
    int col = p.start_col, row = p.start_row;
    for (char step : p.steps) {
      if (step == 'R') {
        if (row >= col)
          ++s.nu;
        else
          ++s.mu;
        if (row == n - 1) ++s.rho1;
        if (row == n - 2) ++s.rho2;
        ++col;
      } else {
        --row;
      }
    }
  }
  return s;
}

void enumerate_nilps(int n, const std::function<void(const PathFamily&)>& yield) {
  enumerate_dpps(n, [&](const Dpp& d) {
    PathFamily fam = dpp_to_nilp(d);
    if (!(nilp_to_dpp(fam) == d)) throw std::logic_error("nilp: bijection round trip failed");
    yield(fam);
  });
}

MPoly horizontal_edge_weight(int n, int col, int row) {
  const MPoly x = MPoly::variable(Var::x);
  if (row == n - 1) return x * MPoly::variable(Var::z1);
  if (row == n - 2) return x * MPoly::variable(Var::z2);
  if (row >= col) return x;
  return MPoly::variable(Var::y);
}

MPoly path_weight(int n, const LatticePath& p) {
  MPoly w(1);
  int col = p.start_col, row = p.start_row;
  for (char step : p.steps) {
    if (step == 'R') {
      w *= horizontal_edge_weight(n, col, row);
      ++col;
    } else {
      --row;
    }
  }
  return w;
}

MPoly family_weight(const PathFamily& fam) {
  MPoly w(1);
  for (const auto& p : fam.paths) w *= path_weight(fam.n, p);
  return w;
}

MPoly path_weight_sum_bruteforce(int n, int j, int i) {
  if (i < 0 || i > n - 1 || j < 0 || j > n - 1)
    throw std::invalid_argument("path_weight_sum: endpoint outside grid");
  // table[a][b] = weighted sum of paths from (a, b) to (i, 0)
  std::vector<std::vector<MPoly>> table(i + 1, std::vector<MPoly>(j + 1, MPoly(0)));
  table[i][0] = MPoly(1);
  for (int a = i; a >= 0; --a)
    for (int b = 0; b <= j; ++b) {
      if (a == i && b == 0) continue;
      MPoly sum(0);
      if (a < i) sum += horizontal_edge_weight(n, a, b) * table[a + 1][b];
      if (b > 0) sum += table[a][b - 1];
      table[a][b] = std::move(sum);
    }
  return table[0][j];
}

MPoly path_weight_sum_closed(int n, int j, int i) {
  if (i < 0 || i > n - 1 || j < 0 || j > n - 1)
    throw std::invalid_argument("path_weight_sum: endpoint outside grid");
  MPoly total(0);
  if (j <= n - 3) {
    for (int k = 0; k <= std::min(i, j + 1); ++k) {
      BigInt c = binomial(i - 1, i - k) * binomial(j + 1, k);
      Exps e{};
      e[static_cast<int>(Var::x)] = k;
      e[static_cast<int>(Var::y)] = i - k;
      total += MPoly::monomial(c, e);
    }
  } else if (j == n - 2) {
    for (int k = 0; k <= i; ++k)
      for (int l = 0; l <= k; ++l) {
        BigInt c = binomial(i - 1, i - k) * binomial(n - l - 2, k - l);
        Exps e{};
        e[static_cast<int>(Var::x)] = k;
        e[static_cast<int>(Var::y)] = i - k;
        e[static_cast<int>(Var::z2)] = l;
        total += MPoly::monomial(c, e);
      }
  } else {  // j == n - 1
    for (int k = 0; k <= i; ++k)
      for (int l = 0; l <= k; ++l)
        for (int m = 0; m <= l; ++m) {
          BigInt c = binomial(i - 1, i - k) * binomial(n - l - 2, k - l);
          Exps e{};
          e[static_cast<int>(Var::x)] = k;
          e[static_cast<int>(Var::y)] = i - k;
          e[static_cast<int>(Var::z1)] = m;
          e[static_cast<int>(Var::z2)] = l - m;
          total += MPoly::monomial(c, e);
        }
  }
  return total;
}

std::string PathFamily::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  auto arr = nlohmann::json::array();
  for (const auto& p : paths) {
    nlohmann::json pj;
    pj["start"] = {p.start_col, p.start_row};
    pj["steps"] = p.steps;
    arr.push_back(std::move(pj));
  }
  j["paths"] = std::move(arr);
  return j.dump();
}

PathFamily PathFamily::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  PathFamily fam;
  fam.n = j.at("n").get<int>();
  for (const auto& pj : j.at("paths")) {
    LatticePath p;
    p.start_col = pj.at("start")[0].get<int>();
    p.start_row = pj.at("start")[1].get<int>();
    p.steps = pj.at("steps").get<std::string>();
    fam.paths.push_back(std::move(p));
  }
  return fam;
}

}  // namespace refine
