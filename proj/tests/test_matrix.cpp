#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "loopbrauer/matrix.hpp"

using namespace loopbrauer;

namespace {

Matrix<Rational> random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 3);
  Matrix<Rational> m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Rational(num(rng), den(rng));
  return m;
}

}  // namespace

TEST_CASE("kernel of a known matrix") {
  // rows (1 1 0), (0 0 1): kernel spanned by (1, -1, 0)
  Matrix<Rational> m(2, 3);
  m.at(0, 0) = 1;
  m.at(0, 1) = 1;
  m.at(1, 2) = 1;
  auto k = kernel_basis(m);
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] * Rational(-1) == k[0][1]);
  CHECK(k[0][2].is_zero());
}

TEST_CASE("kernel of identity is empty, of zero is full") {
  CHECK(kernel_basis(Matrix<Rational>::identity(4)).empty());
  Matrix<Rational> z(3, 5);
  CHECK(kernel_basis(z).size() == 5);
}

TEST_CASE("rank-nullity and A k = 0 on random matrices") {
  std::mt19937_64 rng(123);
  for (int it = 0; it < 200; ++it) {
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    std::size_t r = dim(rng), c = dim(rng);
    Matrix<Rational> m = random_matrix(rng, r, c);
    auto k = kernel_basis(m);
    CHECK(matrix_rank(m) + k.size() == c);
    for (const auto& v : k) {
      std::vector<Rational> img = m * v;
      for (const auto& x : img) CHECK(x.is_zero());
    }
  }
}

TEST_CASE("in_span") {
  std::vector<std::vector<Rational>> basis = {{Rational(1), Rational(0), Rational(2)},
                                              {Rational(0), Rational(1), Rational(0)}};
  CHECK(in_span(basis, {Rational(2), Rational(3), Rational(4)}));
  CHECK(!in_span(basis, {Rational(0), Rational(0), Rational(1)}));
  CHECK(in_span(basis, {Rational(0), Rational(0), Rational(0)}));
}

TEST_CASE("matrix arithmetic sanity") {
  std::mt19937_64 rng(5);
  Matrix<Rational> a = random_matrix(rng, 3, 3), b = random_matrix(rng, 3, 3),
                   c = random_matrix(rng, 3, 3);
  CHECK((a * b) * c == a * (b * c));
  CHECK(a * Matrix<Rational>::identity(3) == a);
  CHECK((a + b).transpose() == a.transpose() + b.transpose());
  CHECK((a * b).transpose() == b.transpose() * a.transpose());
}
