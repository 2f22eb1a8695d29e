#pragma once

#include <map>
#include <string>
#include <utility>

#include "loopbrauer/rational.hpp"

namespace loopbrauer {

/// Laurent polynomial in one indeterminate x with exact Rational
/// coefficients. The term map never stores a zero coefficient, so
/// equality of values is equality of term maps.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Rational& c) {  // NOLINT: constants convert implicitly
    if (!c.is_zero()) terms_[0] = c;
  }
  LaurentPoly(long c) : LaurentPoly(Rational(c)) {}  // NOLINT

  static LaurentPoly monomial(int exponent, const Rational& c = Rational(1));
  static LaurentPoly x() { return monomial(1); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, Rational>& terms() const { return terms_; }
  int min_exponent() const;  // requires nonzero
  int max_exponent() const;  // requires nonzero

  LaurentPoly& add_term(int exponent, const Rational& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }

  /// Exact value at x = x0. Throws EvalAtZero when x0 = 0 and a
  /// negative-exponent term is present.
  Rational eval(const Rational& x0) const;

  /// Human-readable form, e.g. "x^2 - 1/2 x^-1".
  std::string str() const;

 private:
  std::map<int, Rational> terms_;
};

/// Two-parameter Laurent coefficients: exact polynomials in x1, x2.
/// Used by the two-parameter product, whose diagram weights are
/// x1^l1 x2^l2 monomials.
class BiLaurent {
 public:
  BiLaurent() = default;
  BiLaurent(const Rational& c) {  // NOLINT
    if (!c.is_zero()) terms_[{0, 0}] = c;
  }
  BiLaurent(long c) : BiLaurent(Rational(c)) {}  // NOLINT

  static BiLaurent monomial(int e1, int e2, const Rational& c = Rational(1));

  bool is_zero() const { return terms_.empty(); }
  const std::map<std::pair<int, int>, Rational>& terms() const { return terms_; }

  BiLaurent& operator+=(const BiLaurent& o);
  BiLaurent& operator-=(const BiLaurent& o);
  friend BiLaurent operator+(BiLaurent a, const BiLaurent& b) { return a += b; }
  friend BiLaurent operator-(BiLaurent a, const BiLaurent& b) { return a -= b; }
  friend BiLaurent operator*(const BiLaurent& a, const BiLaurent& b);
  BiLaurent operator-() const;

  friend bool operator==(const BiLaurent& a, const BiLaurent& b) {
    return a.terms_ == b.terms_;
  }

  /// Substitutes x1 = x2 = x, collapsing to a one-parameter value.
  LaurentPoly specialize_equal() const;

  std::string str() const;

 private:
  std::map<std::pair<int, int>, Rational> terms_;
};

}  // namespace loopbrauer
