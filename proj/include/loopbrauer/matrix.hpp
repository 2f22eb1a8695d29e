#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

#include "loopbrauer/laurent.hpp"
#include "loopbrauer/rational.hpp"

namespace loopbrauer {

/// Small dense matrix over an exact coefficient ring (Rational,
/// LaurentPoly, BiLaurent). Row-major storage; vectors act as columns.
template <class T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& at(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return a_[i * cols_ + j];
  }
  const T& at(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return a_[i * cols_ + j];
  }

  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    assert(x.rows_ == y.rows_ && x.cols_ == y.cols_);
    Matrix r(x.rows_, x.cols_);
    for (std::size_t k = 0; k < x.a_.size(); ++k) r.a_[k] = x.a_[k] + y.a_[k];
    return r;
  }
  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    assert(x.rows_ == y.rows_ && x.cols_ == y.cols_);
    Matrix r(x.rows_, x.cols_);
    for (std::size_t k = 0; k < x.a_.size(); ++k) r.a_[k] = x.a_[k] - y.a_[k];
    return r;
  }
  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    assert(x.cols_ == y.rows_);
    Matrix r(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const T& xik = x.at(i, k);
        if (xik == T(0)) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) {
          if (y.at(k, j) == T(0)) continue;
          r.at(i, j) += xik * y.at(k, j);
        }
      }
    return r;
  }
  friend Matrix operator*(const T& s, const Matrix& x) {
    Matrix r(x.rows_, x.cols_);
    for (std::size_t k = 0; k < x.a_.size(); ++k) r.a_[k] = s * x.a_[k];
    return r;
  }
  std::vector<T> operator*(const std::vector<T>& v) const {
    assert(v.size() == cols_);
    std::vector<T> r(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        if (at(i, j) == T(0)) continue;
        r[i] += at(i, j) * v[j];
      }
    return r;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  bool is_zero() const {
    for (const auto& v : a_)
      if (!(v == T(0))) return false;
    return true;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<T> a_;
};

inline Matrix<Rational> eval_matrix(const Matrix<LaurentPoly>& m, const Rational& x0) {
  Matrix<Rational> r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).eval(x0);
  return r;
}

inline Matrix<LaurentPoly> lift_matrix(const Matrix<Rational>& m) {
  Matrix<LaurentPoly> r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = LaurentPoly(m.at(i, j));
  return r;
}

/// Basis of the null space {v : Av = 0}, as columns. Exact computation
/// by fraction-free (Bareiss) elimination on the denominator-cleared
/// integer matrix.
std::vector<std::vector<Rational>> kernel_basis(const Matrix<Rational>& m);

/// Column rank, via the same elimination.
std::size_t matrix_rank(const Matrix<Rational>& m);

/// True if v lies in the column span of the given basis vectors.
bool in_span(const std::vector<std::vector<Rational>>& basis, const std::vector<Rational>& v);

}  // namespace loopbrauer
