#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "refine/mpoly.hpp"
#include "refine/numeric.hpp"

using namespace refine;

namespace {

MPoly random_poly(std::mt19937_64& rng, int max_terms = 6, int max_exp = 3) {
  std::uniform_int_distribution<int> nterms(0, max_terms), coeff(-9, 9), exp(0, max_exp);
  MPoly p;
  const int t = nterms(rng);
  for (int i = 0; i < t; ++i) {
    Exps e{};
    for (int v = 0; v < kNumVars; ++v) e[v] = exp(rng);
    p += MPoly::monomial(coeff(rng), e);
  }
  return p;
}

std::map<Var, Rational> random_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  std::map<Var, Rational> pt;
  for (int v = 0; v < kNumVars; ++v) {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    pt[static_cast<Var>(v)] = r;
  }
  return pt;
}

}  // namespace

TEST_CASE("constants and variables") {
  CHECK(MPoly(0).is_zero());
  CHECK(MPoly(5).num_terms() == 1);
  MPoly x = MPoly::variable(Var::x);
  Exps e{};
  e[0] = 1;
  CHECK(x.coeff(e) == 1);
  CHECK((x - x).is_zero());
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(0);
  for (int trial = 0; trial < 200; ++trial) {
    MPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a * MPoly(1) == a);
    CHECK((a * MPoly(0)).is_zero());
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    MPoly a = random_poly(rng), b = random_poly(rng);
    auto pt = random_point(rng);
    CHECK((a + b).eval(pt) == a.eval(pt) + b.eval(pt));
    CHECK((a * b).eval(pt) == a.eval(pt) * b.eval(pt));
  }
}

TEST_CASE("pow agrees with repeated multiplication") {
  std::mt19937_64 rng(2);
  MPoly a = random_poly(rng, 4, 2);
  MPoly prod(1);
  for (unsigned e = 0; e <= 5; ++e) {
    CHECK(a.pow(e) == prod);
    prod *= a;
  }
}

TEST_CASE("substitution composes with evaluation") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    MPoly a = random_poly(rng), s = random_poly(rng, 3, 2);
    auto pt = random_point(rng);
    auto pt2 = pt;
    pt2[Var::y] = s.eval(pt);
    CHECK(a.substitute(Var::y, s).eval(pt) == a.eval(pt2));
  }
}

TEST_CASE("divexact recovers factors") {
  std::mt19937_64 rng(4);
  int done = 0;
  while (done < 100) {
    MPoly a = random_poly(rng), b = random_poly(rng);
    if (a.is_zero() || b.is_zero()) continue;
    MPoly prod = a * b;
    CHECK(prod.divexact(b) == a);
    CHECK(prod.divexact(a) == b);
    ++done;
  }
}

TEST_CASE("divexact rejects inexact division") {
  MPoly x = MPoly::variable(Var::x);
  MPoly y = MPoly::variable(Var::y);
  CHECK_THROWS_AS((x * x + MPoly(1)).divexact(x + y), std::domain_error);
  CHECK_THROWS_AS(MPoly(3).divexact(MPoly(2)), std::domain_error);
  CHECK_THROWS_AS(x.divexact(MPoly(0)), std::invalid_argument);
}

TEST_CASE("serialization round trip") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    MPoly a = random_poly(rng);
    a.declare_vars({Var::x, Var::y, Var::z1, Var::z2, Var::z3, Var::z4});
    MPoly back = MPoly::from_json(a.to_json());
    CHECK(back == a);
    CHECK(back.to_json() == a.to_json());
  }
}

TEST_CASE("declared variables survive serialization") {
  MPoly p = MPoly::variable(Var::z1) + MPoly(1);
  p.declare_vars({Var::x, Var::z1});
  MPoly q = MPoly::from_json(p.to_json());
  CHECK(q == p);
  CHECK(q.vars() == p.vars());
}

TEST_CASE("grlex term order in serialized output") {
  MPoly p = MPoly::variable(Var::x).pow(3) + MPoly::variable(Var::y) + MPoly(7);
  // terms() iterates lowest degree first
  std::vector<int> degrees;
  for (const auto& [e, c] : p.terms()) {
    int d = 0;
    for (int v = 0; v < kNumVars; ++v) d += e[v];
    degrees.push_back(d);
  }
  CHECK(degrees == std::vector<int>{0, 1, 3});
}

TEST_CASE("binomial conventions") {
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(-1, 0) == 1);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(3, 5) == 0);
  CHECK_THROWS_AS(binomial(-2, 1), std::invalid_argument);
}
