#pragma once

#include <string>
#include <vector>

#include "refine/asm_matrix.hpp"
#include "refine/numeric.hpp"

namespace refine {

// A configuration of the six-vertex model with domain-wall boundary
// conditions, stored as the grid of vertex types 1..6.
class SvConfig {
 public:
  // Validates global edge consistency and the boundary conditions.
  static SvConfig validate(const std::vector<std::vector<int>>& types);

  int n() const { return n_; }
  int type_at(int i, int j) const { return types_[i * n_ + j]; }

  // Total count of type-k vertices.
  int count(int k) const;
  // Count of type-k vertices in row i (0-based).
  int count_in_row(int i, int k) const;

  friend bool operator==(const SvConfig& a, const SvConfig& b) {
    return a.n_ == b.n_ && a.types_ == b.types_;
  }

  std::string to_json() const;
  static SvConfig from_json(const std::string& text);

 private:
  friend SvConfig asm_to_sv(const AsmMatrix&);
  SvConfig(int n, std::vector<std::int8_t> types) : n_(n), types_(std::move(types)) {}

  int n_;
  std::vector<std::int8_t> types_;
};

struct SvStats {
  int nu = 0;
  int mu = 0;
  int rho1 = 0;
  int rho2 = 0;
};

SvConfig asm_to_sv(const AsmMatrix& a);
AsmMatrix sv_to_asm(const SvConfig& c);
SvStats sv_stats(const SvConfig& c);

// Spectral parameters for the weights a(u,v) = uq - v/q, b(u,v) = u/q - vq,
// c(u,v) = (q^2 - q^-2) u^(1/2) v^(1/2). Square roots are stored directly
// (u_i = u_sqrt[i]^2, v_j = v_sqrt[j]^2) so every weight is rational.
struct SpectralPoint {
  Rational q;
  std::vector<Rational> u_sqrt;
  std::vector<Rational> v_sqrt;

  Rational u(int i) const { return u_sqrt[i] * u_sqrt[i]; }
  Rational v(int j) const { return v_sqrt[j] * v_sqrt[j]; }
};

Rational weight_a(const Rational& q, const Rational& u, const Rational& v);
Rational weight_b(const Rational& q, const Rational& u, const Rational& v);
Rational weight_c(const Rational& q, const Rational& u_sqrt, const Rational& v_sqrt);

// Brute-force sum over SVDWBC(n) of the product of vertex weights.
Rational sv_partition_function(int n, const SpectralPoint& pt, int cap = 5);

// Right-hand side of the Izergin-Korepin determinant formula; requires
// distinct u's, distinct v's, and nonvanishing a, b at every (u_i, v_j).
Rational ik_determinant(int n, const SpectralPoint& pt);

// Checks the specialization relating Z^SV at (s, r, ..., r, t; w, ..., w) to
// the doubly-refined ASM generating function. The arguments are square
// roots of the spectral parameters.
bool verify_zczasm(int n, const Rational& q, const Rational& r_sqrt, const Rational& s_sqrt,
                   const Rational& t_sqrt, const Rational& w_sqrt);

}  // namespace refine
