#pragma once

#include <compare>
#include <string>
#include <vector>

namespace loopbrauer {

/// Permutation of {0..m-1} in one-line notation (images array).
///
/// Composition convention used throughout the project: p.then(q) is the
/// permutation "apply p first, then q", i.e. (p.then(q))(i) = q(p(i)).
/// Under this order the map onto permutation diagrams (top i joined to
/// bottom p(i)') is a product homomorphism with diagram stacking, and
/// the Specht matrices are multiplied along words in the same order.
class Perm {
 public:
  Perm() = default;
  explicit Perm(int m);  // identity
  explicit Perm(std::vector<int> images);

  int size() const { return static_cast<int>(p_.size()); }
  int operator()(int i) const { return p_[i]; }
  const std::vector<int>& images() const { return p_; }

  Perm then(const Perm& o) const;
  Perm inverse() const;
  bool is_identity() const;
  /// Same permutation inside S_m for m >= size(), fixing the new points.
  Perm extended(int m) const;

  static Perm transposition(int m, int i, int j);
  /// Adjacent transposition s_i swapping i and i+1 (0-indexed).
  static Perm adjacent(int m, int i);
  static std::vector<Perm> all(int m);  // lexicographic order

  /// Indices i_1..i_k with *this == s_{i_1}.then(s_{i_2})...then(s_{i_k}).
  std::vector<int> adjacent_word() const;

  friend bool operator==(const Perm& a, const Perm& b) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) = default;

  std::string str() const;

 private:
  std::vector<int> p_;
};

}  // namespace loopbrauer
