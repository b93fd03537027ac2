#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace refine {

// Exact arbitrary-precision integers and rationals. Rationals are kept
// canonical (lowest terms, positive denominator) by GMP.
using BigInt = mpz_class;
using Rational = mpq_class;

// Binomial coefficient with the conventions needed by the K/L/C formulas:
//   binom(m, r) = 0 for r < 0,
//   binom(m, 0) = 1 for every integer m, including m = -1,
//   binom(m, r) = 0 for m >= 0 and r > m.
// A negative upper index with r > 0 never arises in these formulas.
inline BigInt binomial(long m, long r) {
  if (r < 0) return 0;
  if (r == 0) return 1;
  if (m < 0) throw std::invalid_argument("binomial: negative upper index with r > 0");
  if (r > m) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(r));
  return out;
}

inline BigInt factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

inline BigInt pow(const BigInt& base, unsigned long e) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

inline Rational pow(const Rational& base, long e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("pow: zero to negative power");
    return 1 / pow(base, -e);
  }
  Rational out = 1;
  for (long i = 0; i < e; ++i) out *= base;
  return out;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }
inline std::string to_string(const Rational& v) { return v.get_str(); }

}  // namespace refine
