#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

namespace loopbrauer {

/// Exact rational scalar over arbitrary-precision integers.
///
/// Canonical form is maintained at all times: gcd(|num|, den) = 1,
/// den >= 1, and zero is stored as 0/1. Values are immutable in spirit;
/// the arithmetic operators return fresh values and never mutate shared
/// state, so Rational is safe to share across threads.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design
  Rational(long num, long den);
  explicit Rational(const mpz_class& n) : v_(n) {}
  Rational(const mpz_class& num, const mpz_class& den);

  /// Parses "p", "-p" or "p/q". Throws ParseError on malformed input.
  static Rational parse(const std::string& s);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  /// Multiplicative inverse; throws EvalAtZero on zero.
  Rational inverse() const;
  /// Integer power, negative exponents allowed for nonzero values.
  Rational pow(long e) const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c <=> 0;
  }

  /// "p" or "p/q".
  std::string str() const;

 private:
  mpq_class v_;  // kept canonical by every constructor and operator
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

mpz_class binomial(long n, long k);
mpz_class factorial(long n);

}  // namespace loopbrauer
