#include <gmpxx.h>

#include <utility>
#include <vector>

#include "loopbrauer/matrix.hpp"

namespace loopbrauer {

namespace {

struct Echelon {
  std::vector<std::vector<mpz_class>> m;
  std::vector<std::size_t> pivot_cols;  // pivot k sits at (k, pivot_cols[k])
};

// Fraction-free Gaussian elimination (Bareiss). Rows are scaled to
// integers first; the one-step division by the previous pivot is exact.
Echelon echelonize(const Matrix<Rational>& in) {
  const std::size_t R = in.rows(), C = in.cols();
  Echelon e;
  e.m.assign(R, std::vector<mpz_class>(C));
  for (std::size_t i = 0; i < R; ++i) {
    mpz_class lcm = 1;
    for (std::size_t j = 0; j < C; ++j) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), in.at(i, j).den().get_mpz_t());
    for (std::size_t j = 0; j < C; ++j) e.m[i][j] = in.at(i, j).num() * (lcm / in.at(i, j).den());
  }

  std::size_t r = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t sel = r;
    while (sel < R && sgn(e.m[sel][c]) == 0) ++sel;
    if (sel == R) continue;  // free column
    std::swap(e.m[sel], e.m[r]);
    for (std::size_t i = r + 1; i < R; ++i) {
      for (std::size_t j = c + 1; j < C; ++j) {
        mpz_class t = e.m[i][j] * e.m[r][c] - e.m[i][c] * e.m[r][j];
        mpz_divexact(e.m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      e.m[i][c] = 0;
    }
    prev = e.m[r][c];
    e.pivot_cols.push_back(c);
    ++r;
  }
  return e;
}

}  // namespace

std::vector<std::vector<Rational>> kernel_basis(const Matrix<Rational>& m) {
  const std::size_t C = m.cols();
  Echelon e = echelonize(m);
  const std::size_t npiv = e.pivot_cols.size();

  std::vector<bool> is_pivot(C, false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < C; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(C, Rational(0));
    v[f] = Rational(1);
    for (std::size_t k = npiv; k-- > 0;) {
      std::size_t pc = e.pivot_cols[k];
      Rational acc(0);
      for (std::size_t j = pc + 1; j < C; ++j) {
        if (sgn(e.m[k][j]) == 0 || v[j].is_zero()) continue;
        acc += Rational(e.m[k][j]) * v[j];
      }
      v[pc] = -acc / Rational(e.m[k][pc]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t matrix_rank(const Matrix<Rational>& m) { return echelonize(m).pivot_cols.size(); }

bool in_span(const std::vector<std::vector<Rational>>& basis, const std::vector<Rational>& v) {
  const std::size_t n = v.size();
  Matrix<Rational> b(n, basis.size());
  Matrix<Rational> aug(n, basis.size() + 1);
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) {
      b.at(i, j) = basis[j][i];
      aug.at(i, j) = basis[j][i];
    }
  for (std::size_t i = 0; i < n; ++i) aug.at(i, basis.size()) = v[i];
  return matrix_rank(b) == matrix_rank(aug);
}

}  // namespace loopbrauer
