#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "refine/numeric.hpp"

namespace refine {

// The global variable universe, in canonical order. Polynomial equality is
// structural in this fixed order, so no per-object variable remapping exists.
enum class Var : int { x = 0, y = 1, z1 = 2, z2 = 3, z3 = 4, z4 = 5 };

inline constexpr int kNumVars = 6;

const char* var_name(Var v);
std::optional<Var> var_from_name(const std::string& name);

// Exponent vector over the full canonical universe.
using Exps = std::array<int, kNumVars>;

// Graded lexicographic order: total degree first, then lex in canonical
// variable order.
struct GrlexLess {
  bool operator()(const Exps& a, const Exps& b) const {
    int da = 0, db = 0;
    for (int i = 0; i < kNumVars; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da < db;
    return a < b;
  }
};

// Sparse exact multivariate polynomial over BigInt. Zero coefficients are
// never stored. A declared variable list (a subset of the canonical order)
// is carried for serialization; arithmetic extends it to the union of the
// operands' lists.
class MPoly {
 public:
  using TermMap = std::map<Exps, BigInt, GrlexLess>;

  MPoly() = default;
  explicit MPoly(const BigInt& c);
  explicit MPoly(long c) : MPoly(BigInt(c)) {}

  static MPoly variable(Var v);
  static MPoly monomial(const BigInt& coeff, const Exps& exps);

  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  BigInt coeff(const Exps& e) const;

  // Declared variables, in canonical order.
  const std::vector<Var>& vars() const { return vars_; }
  // Variables appearing with nonzero exponent in some term.
  std::vector<Var> used_vars() const;
  // Widens the declared variable list (used when a fixed serialization
  // header is wanted, e.g. generating functions always carry x,y,z1,z2).
  MPoly& declare_vars(const std::vector<Var>& vs);

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  MPoly& operator*=(const BigInt& c);

  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  MPoly pow(unsigned e) const;

  // Exact evaluation; throws if a used variable has no assignment.
  Rational eval(const std::map<Var, Rational>& point) const;

  // Exact composition: substitutes the given polynomials for variables;
  // unlisted variables are left alone.
  MPoly substitute(const std::map<Var, MPoly>& sub) const;
  MPoly substitute(Var v, const MPoly& p) const;

  // Exact division; throws if the division leaves a remainder.
  MPoly divexact(const MPoly& divisor) const;

  std::string to_string() const;

  // Polynomial JSON: {"vars":[...],"terms":[{"c":"<dec>","e":[...]},...]},
  // terms in graded-lex order, coefficients as decimal strings.
  std::string to_json() const;
  static MPoly from_json(const std::string& text);

 private:
  void add_term(const Exps& e, const BigInt& c);
  void merge_vars(const std::vector<Var>& other);

  std::vector<Var> vars_;
  TermMap terms_;
};

}  // namespace refine
