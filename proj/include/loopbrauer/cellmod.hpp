#pragma once

#include <map>
#include <vector>

#include "loopbrauer/algebra.hpp"
#include "loopbrauer/diagram.hpp"
#include "loopbrauer/matrix.hpp"
#include "loopbrauer/symgroup.hpp"

namespace loopbrauer {

/// Cell module M_X(lambda) = I_n^{n-t} u_{n,t} (x)_{S_{n-t}} S^lambda
/// for X = A_n or L_n. The basis is indexed by pairs (cell diagram,
/// standard tableau); flat index = diagram_index * f^lambda + tableau.
///
/// A diagram d acts on a basis vector (a, j) by composing d with a:
/// rank-dropping products are zero (quotient rule), otherwise the
/// result factors as x^l b sigma with b noncrossing, contributing
/// x^l (b (x) rho(sigma) e_j).
class CellModule {
 public:
  CellModule(Family family, int n, const Partition& lambda);

  Family family() const { return family_; }
  int n() const { return n_; }
  int t() const { return t_; }
  const Partition& lambda() const { return lambda_; }
  const std::vector<Diagram>& diagram_basis() const { return basis_; }
  const SpechtRep& specht() const { return specht_; }
  std::size_t f_dim() const { return specht_.dim(); }
  std::size_t dim() const { return dim_; }

  std::size_t flat_index(std::size_t diagram_index, std::size_t tableau_index) const {
    return diagram_index * specht_.dim() + tableau_index;
  }
  std::size_t diagram_index_of(std::size_t flat) const { return flat / specht_.dim(); }
  std::size_t tableau_index_of(std::size_t flat) const { return flat % specht_.dim(); }

  /// Image of the given basis vector under d, as a dense coordinate
  /// column of length dim().
  std::vector<LaurentPoly> act(const Diagram& d, std::size_t basis_index) const;

  Matrix<LaurentPoly> action_matrix(const Diagram& d) const;

  /// All rank-(n-t) diagrams of the family: the spanning set of
  /// I_n^{n-t} whose joint kernel is the radical.
  const std::vector<Diagram>& acting_diagrams() const;

  /// Exact basis of N_X(lambda) at the specialization x = x0.
  std::vector<std::vector<Rational>> radical(const Rational& x0) const;

  bool is_irreducible(const Rational& x0) const;

  /// rho(sigma) lifted through the memo cache (shared by act()).
  const Matrix<Rational>& perm_matrix(const Perm& s) const;

 private:
  Family family_;
  int n_, t_;
  Partition lambda_;
  std::vector<Diagram> basis_;
  std::map<Diagram, std::size_t> index_;
  SpechtRep specht_;
  std::size_t dim_;
  mutable std::map<Perm, Matrix<Rational>> perm_cache_;
  mutable std::vector<Diagram> acting_cache_;
};

}  // namespace loopbrauer
