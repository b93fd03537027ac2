#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "refine/matrix.hpp"

using namespace refine;

namespace {

Matrix<BigInt> random_int_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                 int lo = -9, int hi = 9) {
  std::uniform_int_distribution<int> entry(lo, hi);
  Matrix<BigInt> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = entry(rng);
  return m;
}

Matrix<MPoly> random_poly_matrix(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> coeff(-3, 3), var(0, 2);
  Matrix<MPoly> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      MPoly p(coeff(rng));
      p += MPoly(coeff(rng)) * MPoly::variable(static_cast<Var>(var(rng)));
      m.at(i, j) = p;
    }
  return m;
}

std::vector<std::size_t> random_sorted_indices(std::mt19937_64& rng, std::size_t limit,
                                               std::size_t count) {
  std::vector<std::size_t> all(limit);
  for (std::size_t i = 0; i < limit; ++i) all[i] = i;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(count);
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

TEST_CASE("determinants of small fixed matrices") {
  Matrix<BigInt> m(2, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(1, 0) = 3;
  m.at(1, 1) = 4;
  CHECK(det(m) == -2);
  CHECK(det_cofactor(m) == -2);
  Matrix<BigInt> zero_pivot(2, 2);
  zero_pivot.at(0, 0) = 0;
  zero_pivot.at(0, 1) = 1;
  zero_pivot.at(1, 0) = 1;
  zero_pivot.at(1, 1) = 0;
  CHECK(det(zero_pivot) == -1);
  CHECK(det(Matrix<BigInt>(0, 0)) == 1);
}

TEST_CASE("Bareiss agrees with cofactor expansion over the integers") {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + rng() % 6;
    Matrix<BigInt> m = random_int_matrix(rng, n, n);
    CHECK(det_bareiss(m) == det_cofactor(m));
  }
}

TEST_CASE("Bareiss agrees with cofactor expansion over polynomials") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 1 + rng() % 5;
    Matrix<MPoly> m = random_poly_matrix(rng, n);
    CHECK(det_bareiss(m) == det_cofactor(m));
  }
}

TEST_CASE("Bareiss agrees with cofactor expansion over rationals") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + rng() % 5;
    Matrix<Rational> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational r(num(rng), den(rng));
        r.canonicalize();
        m.at(i, j) = r;
      }
    CHECK(det_bareiss(m) == det_cofactor(m));
  }
}

TEST_CASE("minor and select shapes") {
  std::mt19937_64 rng(13);
  Matrix<BigInt> m = random_int_matrix(rng, 4, 5);
  Matrix<BigInt> sub = m.minor_matrix({1}, {0, 4});
  CHECK(sub.rows() == 3);
  CHECK(sub.cols() == 3);
  CHECK(sub.at(0, 0) == m.at(0, 1));
  CHECK(sub.at(2, 2) == m.at(3, 3));
  Matrix<BigInt> t = m.transpose();
  CHECK(t.rows() == 5);
  CHECK(t.at(2, 3) == m.at(3, 2));
  CHECK(m.select({0, 2}, {1, 3}).at(1, 0) == m.at(2, 1));
  CHECK_THROWS_AS(m.minor_matrix({9}, {}), std::out_of_range);
}

TEST_CASE("classic Desnanot-Jacobi on 500 random matrices") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t n = 2 + rng() % 5;
    Matrix<BigInt> m = random_int_matrix(rng, n, n);
    auto rows = random_sorted_indices(rng, n, 2);
    auto cols = random_sorted_indices(rng, n, 2);
    CHECK(check_desnanot_jacobi(m, DesnanotJacobiForm::classic,
                                {rows[0], rows[1], cols[0], cols[1]}));
  }
}

TEST_CASE("two-column Desnanot-Jacobi on 500 random matrices") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t n = 2 + rng() % 5;
    Matrix<BigInt> m = random_int_matrix(rng, n + 2, n);
    auto rows = random_sorted_indices(rng, n + 2, 4);
    CHECK(check_desnanot_jacobi(m, DesnanotJacobiForm::two_column, rows));
  }
}

TEST_CASE("mixed Desnanot-Jacobi on 500 random matrices") {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t n = 2 + rng() % 5;
    Matrix<BigInt> m = random_int_matrix(rng, n + 1, n);
    auto rows = random_sorted_indices(rng, n + 1, 3);
    std::size_t col = rng() % n;
    CHECK(check_desnanot_jacobi(m, DesnanotJacobiForm::mixed,
                                {rows[0], rows[1], rows[2], col}));
  }
}

TEST_CASE("Desnanot-Jacobi forms hold for polynomial matrices") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix<MPoly> m = random_poly_matrix(rng, 4);
    CHECK(check_desnanot_jacobi(m, DesnanotJacobiForm::classic, {0, 2, 1, 3}));
  }
}

TEST_CASE("Desnanot-Jacobi argument validation") {
  Matrix<BigInt> sq(3, 3);
  CHECK_THROWS_AS(check_desnanot_jacobi(sq, DesnanotJacobiForm::classic, {0, 0, 1, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_desnanot_jacobi(sq, DesnanotJacobiForm::two_column, {0, 1, 2, 3}),
                  std::invalid_argument);
  Matrix<BigInt> tall(5, 3);
  CHECK_THROWS_AS(check_desnanot_jacobi(tall, DesnanotJacobiForm::mixed, {0, 1, 2, 0}),
                  std::invalid_argument);
}
