#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <vector>

#include "refine/mpoly.hpp"
#include "refine/numeric.hpp"

namespace refine {

namespace detail {

inline BigInt scalar_divexact(const BigInt& a, const BigInt& b) {
  BigInt out;
  mpz_divexact(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}
inline Rational scalar_divexact(const Rational& a, const Rational& b) { return a / b; }
inline MPoly scalar_divexact(const MPoly& a, const MPoly& b) { return a.divexact(b); }

inline bool scalar_is_zero(const BigInt& a) { return a == 0; }
inline bool scalar_is_zero(const Rational& a) { return a == 0; }
inline bool scalar_is_zero(const MPoly& a) { return a.is_zero(); }

}  // namespace detail

// Dense row-major matrix over an exact scalar domain (BigInt, Rational, MPoly).
template <class S>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols, const S& fill = S())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  S& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const S& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  // Submatrix with the listed rows/columns removed, order preserved.
  Matrix minor_matrix(const std::set<std::size_t>& del_rows,
                      const std::set<std::size_t>& del_cols) const {
    for (auto r : del_rows)
      if (r >= rows_) throw std::out_of_range("minor: row index out of range");
    for (auto c : del_cols)
      if (c >= cols_) throw std::out_of_range("minor: column index out of range");
    Matrix out(rows_ - del_rows.size(), cols_ - del_cols.size());
    std::size_t oi = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (del_rows.count(i)) continue;
      std::size_t oj = 0;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (del_cols.count(j)) continue;
        out.at(oi, oj) = at(i, j);
        ++oj;
      }
      ++oi;
    }
    return out;
  }

  // Submatrix restricted to the listed rows/columns (ascending order).
  Matrix select(const std::vector<std::size_t>& keep_rows,
                const std::vector<std::size_t>& keep_cols) const {
    Matrix out(keep_rows.size(), keep_cols.size());
    for (std::size_t i = 0; i < keep_rows.size(); ++i)
      for (std::size_t j = 0; j < keep_cols.size(); ++j)
        out.at(i, j) = at(keep_rows[i], keep_cols[j]);
    return out;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<S> data_;
};

// Fraction-free Bareiss elimination; every division is exact in the domain.
template <class S>
S det_bareiss(Matrix<S> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return S(1);
  S prev = S(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (detail::scalar_is_zero(m.at(k, k))) {
      std::size_t p = k + 1;
      while (p < n && detail::scalar_is_zero(m.at(p, k))) ++p;
      if (p == n) return S(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        S num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = detail::scalar_divexact(num, prev);
      }
      m.at(i, k) = S(0);
    }
    prev = m.at(k, k);
  }
  S d = m.at(n - 1, n - 1);
  return sign < 0 ? S(0) - d : d;
}

// Cofactor expansion along the first row; retained as an independent oracle.
template <class S>
S det_cofactor(const Matrix<S>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return S(1);
  if (n == 1) return m.at(0, 0);
  S total = S(0);
  for (std::size_t j = 0; j < n; ++j) {
    if (detail::scalar_is_zero(m.at(0, j))) continue;
    S sub = det_cofactor(m.minor_matrix({0}, {j}));
    S term = m.at(0, j) * sub;
    if (j % 2 == 0)
      total = total + term;
    else
      total = total - term;
  }
  return total;
}

template <class S>
S det(const Matrix<S>& m) {
  return det_bareiss(m);
}

enum class DesnanotJacobiForm { classic, two_column, mixed };

// Evaluates one of the three Desnanot-Jacobi identity forms exactly and
// reports whether it holds. Indices are 0-based.
//   classic:    n x n matrix, indices = {i1, i2, j1, j2}, i1 < i2, j1 < j2
//   two_column: (n+2) x n matrix, indices = {k1 < k2 < k3 < k4} (rows)
//   mixed:      (n+1) x n matrix, indices = {k1 < k2 < k3, l} (rows, column)
template <class S>
bool check_desnanot_jacobi(const Matrix<S>& m, DesnanotJacobiForm form,
                           const std::vector<std::size_t>& indices) {
  switch (form) {
    case DesnanotJacobiForm::classic: {
      if (m.rows() != m.cols()) throw std::invalid_argument("classic form needs a square matrix");
      if (indices.size() != 4) throw std::invalid_argument("classic form needs 4 indices");
      auto [i1, i2, j1, j2] = std::array{indices[0], indices[1], indices[2], indices[3]};
      if (i1 >= i2 || j1 >= j2 || i2 >= m.rows() || j2 >= m.cols())
        throw std::invalid_argument("classic form: bad indices");
      S lhs = det(m) * det(m.minor_matrix({i1, i2}, {j1, j2}));
      S rhs = det(m.minor_matrix({i1}, {j1})) * det(m.minor_matrix({i2}, {j2})) -
              det(m.minor_matrix({i1}, {j2})) * det(m.minor_matrix({i2}, {j1}));
      return lhs == rhs;
    }
    case DesnanotJacobiForm::two_column: {
      if (m.rows() != m.cols() + 2)
        throw std::invalid_argument("two_column form needs an (n+2) x n matrix");
      if (indices.size() != 4) throw std::invalid_argument("two_column form needs 4 indices");
      auto k = indices;
      if (!(k[0] < k[1] && k[1] < k[2] && k[2] < k[3] && k[3] < m.rows()))
        throw std::invalid_argument("two_column form: bad indices");
      auto d = [&](std::size_t a, std::size_t b) { return det(m.minor_matrix({a, b}, {})); };
      S lhs = d(k[0], k[1]) * d(k[2], k[3]) - d(k[0], k[2]) * d(k[1], k[3]) +
              d(k[0], k[3]) * d(k[1], k[2]);
      return detail::scalar_is_zero(lhs);
    }
    case DesnanotJacobiForm::mixed: {
      if (m.rows() != m.cols() + 1)
        throw std::invalid_argument("mixed form needs an (n+1) x n matrix");
      if (indices.size() != 4) throw std::invalid_argument("mixed form needs 3 row indices and a column");
      auto [k1, k2, k3, l] = std::array{indices[0], indices[1], indices[2], indices[3]};
      if (!(k1 < k2 && k2 < k3 && k3 < m.rows() && l < m.cols()))
        throw std::invalid_argument("mixed form: bad indices");
      S lhs = det(m.minor_matrix({k1}, {})) * det(m.minor_matrix({k2, k3}, {l})) -
              det(m.minor_matrix({k2}, {})) * det(m.minor_matrix({k1, k3}, {l})) +
              det(m.minor_matrix({k3}, {})) * det(m.minor_matrix({k1, k2}, {l}));
      return detail::scalar_is_zero(lhs);
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace refine
