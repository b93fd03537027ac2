#pragma once

#include <functional>
#include <string>
#include <vector>

namespace refine {

struct DppStats {
  int nu = 0;
  int mu = 0;
  int rho1 = 0;  // number of n's (first row only)
  int rho2 = 0;  // number of (n-1)'s plus 1 if the first row has length n-1
  int rho3 = 0;  // number of (n-1)'s in the first row
};

// A descending plane partition with each part at most order_n. Row i
// (1-based) conceptually occupies columns i .. lambda_i + i - 1; internally
// rows are stored as plain part lists, so D_{ij} = rows()[i-1][j-i].
class Dpp {
 public:
  // Validates against the row/column and interlacing conditions; throws
  // std::invalid_argument on violation. The empty array is valid.
  static Dpp validate(const std::vector<std::vector<int>>& rows, int order_n);

  static Dpp empty(int order_n) { return Dpp(order_n, {}); }

  int order_n() const { return n_; }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  // 1-based D_{ij} indexing; part must exist.
  int part(int i, int j) const { return rows_[i - 1][j - i]; }
  bool part_defined(int i, int j) const {
    return i >= 1 && i <= num_rows() && j >= i &&
           j - i < static_cast<int>(rows_[i - 1].size());
  }

  friend bool operator==(const Dpp& a, const Dpp& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }
  friend bool operator<(const Dpp& a, const Dpp& b) { return a.rows_ < b.rows_; }

  std::string to_json() const;
  static Dpp from_json(const std::string& text);

 private:
  friend void enumerate_dpps(int, const std::function<void(const Dpp&)>&);
  friend Dpp dpp_star(const Dpp&);
  friend Dpp dpp_dagger(const Dpp&);
  Dpp(int n, std::vector<std::vector<int>> rows) : n_(n), rows_(std::move(rows)) {}

  int n_;
  std::vector<std::vector<int>> rows_;
};

void enumerate_dpps(int n, const std::function<void(const Dpp&)>& yield);
std::vector<Dpp> all_dpps(int n);

DppStats dpp_stats(const Dpp& d);

// The Mills-Robbins-Rumsey complementation; an involution whose statistics
// transform as (nu, mu, rho1, rho2) -> (n(n-1)/2 - nu - mu, mu, n-1-rho1,
// n-1-rho2).
Dpp dpp_star(const Dpp& d);

// Rewrites the first row's n's and (n-1)'s so that rho1 and rho2 swap; an
// involution fixing exactly the DPPs with rho1 = rho2.
Dpp dpp_dagger(const Dpp& d);

}  // namespace refine
