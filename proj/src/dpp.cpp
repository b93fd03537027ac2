#include "refine/dpp.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace refine {

Dpp Dpp::validate(const std::vector<std::vector<int>>& rows, int order_n) {
  if (order_n < 1) throw std::invalid_argument("dpp: order must be >= 1");
  const int t = static_cast<int>(rows.size());
  for (int r = 0; r < t; ++r) {
    const auto& row = rows[r];
    if (row.empty()) throw std::invalid_argument("dpp: empty row");
    const int lambda = static_cast<int>(row.size());
    for (int c = 0; c < lambda; ++c) {
      if (row[c] < 1) throw std::invalid_argument("dpp: nonpositive part");
      if (row[c] > order_n) throw std::invalid_argument("dpp: part exceeds order");
      if (c > 0 && row[c] > row[c - 1])
        throw std::invalid_argument("dpp: weak row decrease violated");
    }
    if (row[0] <= lambda)
      throw std::invalid_argument("dpp: first part must exceed row length");
    if (r > 0) {
      const auto& prev = rows[r - 1];
      if (static_cast<int>(prev.size()) < row[0])
        throw std::invalid_argument("dpp: previous row length below first part");
      // part D_{i+1,j} sits under D_{i,j}, i.e. under prev[c+1]
      for (int c = 0; c < lambda; ++c) {
        if (c + 1 >= static_cast<int>(prev.size()))
          throw std::invalid_argument("dpp: row extends past the row above");
        if (row[c] >= prev[c + 1])
          throw std::invalid_argument("dpp: strict column decrease violated");
      }
    }
  }
  return Dpp(order_n, rows);
}

namespace {

struct DppEnumerator {
  int n;
  std::vector<std::vector<int>> rows;
  const std::function<void(int, const std::vector<std::vector<int>>&)>* emit;

  // Extends the current (already valid and yielded) array by every possible
  // further row.
  void add_rows() {
    const int r = static_cast<int>(rows.size());
    const int prev_len = r == 0 ? n : static_cast<int>(rows[r - 1].size());
    const int p0_max = r == 0 ? n : prev_len;
    for (int lambda = 1; lambda <= prev_len - 1; ++lambda) {
      rows.emplace_back();
      fill_parts(lambda, p0_max);
      rows.pop_back();
    }
  }

  void fill_parts(int lambda, int p0_max) {
    // Recursion below may grow `rows` and reallocate, so never hold a
    // reference to the working row across calls.
    const int c = static_cast<int>(rows.back().size());
    if (c == lambda) {
      (*emit)(n, rows);
      add_rows();
      return;
    }
    const int r = static_cast<int>(rows.size()) - 1;
    int hi = c == 0 ? p0_max : rows[r][c - 1];
    if (r > 0) hi = std::min(hi, rows[r - 1][c + 1] - 1);
    const int lo = c == 0 ? lambda + 1 : 1;
    for (int p = lo; p <= hi; ++p) {
      rows[r].push_back(p);
      fill_parts(lambda, p0_max);
      rows[r].pop_back();
    }
  }
};

}  // namespace

void enumerate_dpps(int n, const std::function<void(const Dpp&)>& yield) {
  if (n < 1) throw std::invalid_argument("enumerate_dpps: n must be >= 1");
  const std::function<void(int, const std::vector<std::vector<int>>&)> emit =
      [&yield](int order, const std::vector<std::vector<int>>& rows) {
        yield(Dpp(order, rows));
      };
  DppEnumerator e{n, {}, &emit};
  yield(Dpp::empty(n));
  e.add_rows();
}

std::vector<Dpp> all_dpps(int n) {
  std::vector<Dpp> out;
  enumerate_dpps(n, [&](const Dpp& d) { out.push_back(d); });
  return out;
}

DppStats dpp_stats(const Dpp& d) {
  const int n = d.order_n();
  DppStats s;
  const auto& rows = d.rows();
  for (int r = 0; r < d.num_rows(); ++r) {
    for (int c = 0; c < static_cast<int>(rows[r].size()); ++c) {
      const int p = rows[r][c];
      // j - i = c in the 1-based D_{ij} coordinates
      if (p > c)
        ++s.nu;
      else
        ++s.mu;
      if (p == n) {
        if (r != 0) throw std::logic_error("dpp_stats: n outside the first row");
        ++s.rho1;
      }
      if (p == n - 1 && n >= 2) {
        if (r > 1) throw std::logic_error("dpp_stats: n-1 outside the first two rows");
        ++s.rho2;
        if (r == 0) ++s.rho3;
      }
    }
  }
  if (d.num_rows() > 0 && static_cast<int>(rows[0].size()) == n - 1) ++s.rho2;
  return s;
}

Dpp dpp_star(const Dpp& d) {
  const int n = d.order_n();
  std::vector<std::vector<int>> rows;
  for (int i = 1; i <= n - 1; ++i) {
    std::vector<int> row;
    for (int j = i; j <= n - 1; ++j) {
      if (d.part_defined(n - j, n - i)) {
        const int p = d.part(n - j, n - i);
        if (p > j - i) break;  // D*_{ij} not defined
        row.push_back(j - i + 1 - p);
      } else {
        // count rows k whose part D_{k, n-j} exists with n+2-i-D_{k,n-j} <= k
        int count = 0;
        for (int k = 1; k <= n - j; ++k)
          if (d.part_defined(k, n - j) && n + 2 - i - d.part(k, n - j) <= k) ++count;
        row.push_back(n + 1 - i - count);
      }
    }
    if (row.empty()) break;
    rows.push_back(std::move(row));
  }
  return Dpp::validate(rows, n);
}

Dpp dpp_dagger(const Dpp& d) {
  const int n = d.order_n();
  if (d.num_rows() == 0) return d;
  DppStats s = dpp_stats(d);
  auto rows = d.rows();
  const int head = s.rho1 + s.rho3;
  std::vector<int> first;
  for (int i = 0; i < s.rho2; ++i) first.push_back(n);
  for (int i = 0; i < head - s.rho2; ++i) first.push_back(n - 1);
  first.insert(first.end(), rows[0].begin() + head, rows[0].end());
  rows[0] = std::move(first);
  return Dpp::validate(rows, n);
}

std::string Dpp::to_json() const {
  nlohmann::json j;
  j["n"] = n_;
  j["rows"] = rows_;
  return j.dump();
}

Dpp Dpp::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  return validate(j.at("rows").get<std::vector<std::vector<int>>>(), j.at("n").get<int>());
}

}  // namespace refine
