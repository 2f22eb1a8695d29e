#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "loopbrauer/matrix.hpp"
#include "loopbrauer/perm.hpp"
#include "loopbrauer/rational.hpp"

namespace loopbrauer {

/// Integer partition: weakly decreasing positive parts; {} is the empty
/// partition of 0.
using Partition = std::vector<int>;

int partition_size(const Partition& p);
bool is_partition(const Partition& p);
std::string partition_str(const Partition& p);
Partition partition_parse(const std::string& s);  // "2,1" or "" for empty

/// All partitions of m in reverse-lexicographic order: (m) first,
/// (1,..,1) last; partitions_of(0) = { {} }.
std::vector<Partition> partitions_of(int m);

/// Sum of contents c(p) = column - row over the Ferrers diagram.
long contents_sum(const Partition& p);

/// (inner, outer): partitions obtained by removing / adding one box.
std::pair<std::vector<Partition>, std::vector<Partition>> corners(const Partition& p);

std::vector<Partition> branch_restrict(const Partition& p);
std::vector<Partition> branch_induce(const Partition& p);

/// Dimension f^lambda by the hook length formula.
mpz_class hook_dim(const Partition& p);

/// Character chi^lambda on the class of cycle type mu, by the
/// Murnaghan-Nakayama border-strip recursion. Independent of the
/// Specht matrices; used as their cross-check oracle.
mpz_class mn_character(const Partition& lambda, const Partition& mu);

/// Standard tableau stored by rows.
using Tableau = std::vector<std::vector<int>>;

std::vector<Tableau> standard_tableaux(const Partition& p);

/// Specht module S^lambda in Young's seminormal form: exact Rational
/// matrices for the adjacent transpositions in the standard-tableau
/// basis. The seminormal (rather than orthogonal) normalization keeps
/// every entry rational.
class SpechtRep {
 public:
  static SpechtRep build(const Partition& lambda);

  const Partition& lambda() const { return lambda_; }
  int m() const { return m_; }
  std::size_t dim() const { return dim_; }
  const std::vector<Tableau>& tableaux() const { return tableaux_; }

  /// Matrix of s_i = (i+1, i+2) in 1-indexed terms; 0 <= i <= m-2.
  const Matrix<Rational>& gen(int i) const { return gen_[i]; }

  /// Matrix of an arbitrary permutation: generator matrices multiplied
  /// along an adjacent-transposition word (Perm::adjacent_word order).
  Matrix<Rational> action(const Perm& s) const;

 private:
  Partition lambda_;
  int m_ = 0;
  std::size_t dim_ = 0;
  std::vector<Tableau> tableaux_;
  std::vector<Matrix<Rational>> gen_;
};

/// Basis vector (w, j) of the induced module
/// ind_{S_m}^{S_{m+1}} S^lambda realized on coset representatives
/// tau_j = (j, m+1), tau_{m+1} = id (j is 1-indexed).
struct InducedVector {
  std::vector<Rational> w;
  int j = 1;
};

/// Left action of sigma in S_{m+1}: finds the unique s with
/// sigma tau_j in tau_s S_m and returns (rho(tau_s sigma tau_j) w, s).
InducedVector induced_action(const SpechtRep& rho, const Perm& sigma, const InducedVector& v);

}  // namespace loopbrauer
