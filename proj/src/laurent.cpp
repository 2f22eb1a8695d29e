#include "loopbrauer/laurent.hpp"

#include <sstream>

#include "loopbrauer/errors.hpp"

namespace loopbrauer {

LaurentPoly LaurentPoly::monomial(int exponent, const Rational& c) {
  LaurentPoly p;
  if (!c.is_zero()) p.terms_[exponent] = c;
  return p;
}

int LaurentPoly::min_exponent() const { return terms_.begin()->first; }
int LaurentPoly::max_exponent() const { return terms_.rbegin()->first; }

LaurentPoly& LaurentPoly::add_term(int exponent, const Rational& c) {
  if (c.is_zero()) return *this;
  auto it = terms_.find(exponent);
  if (it == terms_.end()) {
    terms_[exponent] = c;
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

Rational LaurentPoly::eval(const Rational& x0) const {
  if (x0.is_zero() && !terms_.empty() && min_exponent() < 0)
    throw EvalAtZero("Laurent polynomial with negative exponents evaluated at x = 0");
  Rational acc(0);
  for (const auto& [e, c] : terms_) acc += c * x0.pow(e);
  return acc;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // print high degree first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rational c = it->second;
    if (first) {
      if (c.sign() < 0) {
        os << "-";
        c = -c;
      }
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
      if (c.sign() < 0) c = -c;
    }
    int e = it->first;
    if (e == 0) {
      os << c.str();
    } else {
      if (!(c == Rational(1))) os << c.str() << " ";
      os << "x";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

BiLaurent BiLaurent::monomial(int e1, int e2, const Rational& c) {
  BiLaurent p;
  if (!c.is_zero()) p.terms_[{e1, e2}] = c;
  return p;
}

BiLaurent& BiLaurent::operator+=(const BiLaurent& o) {
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_[e] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

BiLaurent& BiLaurent::operator-=(const BiLaurent& o) {
  BiLaurent neg = o.operator-();
  return *this += neg;
}

BiLaurent operator*(const BiLaurent& a, const BiLaurent& b) {
  BiLaurent r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      std::pair<int, int> e{ea.first + eb.first, ea.second + eb.second};
      auto it = r.terms_.find(e);
      if (it == r.terms_.end()) {
        Rational c = ca * cb;
        if (!c.is_zero()) r.terms_[e] = c;
      } else {
        it->second += ca * cb;
        if (it->second.is_zero()) r.terms_.erase(it);
      }
    }
  return r;
}

BiLaurent BiLaurent::operator-() const {
  BiLaurent r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

LaurentPoly BiLaurent::specialize_equal() const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.add_term(e.first + e.second, c);
  return p;
}

std::string BiLaurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rational c = it->second;
    if (!first) {
      os << (c.sign() < 0 ? " - " : " + ");
      if (c.sign() < 0) c = -c;
    } else {
      if (c.sign() < 0) {
        os << "-";
        c = -c;
      }
      first = false;
    }
    auto [e1, e2] = it->first;
    bool unit_coeff = (c == Rational(1)) && (e1 != 0 || e2 != 0);
    if (!unit_coeff) os << c.str();
    if (e1 != 0) {
      if (!unit_coeff || e1 != it->first.first) os << " ";
      os << "x1";
      if (e1 != 1) os << "^" << e1;
    }
    if (e2 != 0) {
      if (e1 != 0 || !unit_coeff) os << " ";
      os << "x2";
      if (e2 != 1) os << "^" << e2;
    }
  }
  return os.str();
}

}  // namespace loopbrauer
