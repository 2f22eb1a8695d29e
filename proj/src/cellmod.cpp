#include "loopbrauer/cellmod.hpp"

#include <cassert>

#include "loopbrauer/errors.hpp"

namespace loopbrauer {

CellModule::CellModule(Family family, int n, const Partition& lambda)
    : family_(family), n_(n), t_(n - partition_size(lambda)), lambda_(lambda),
      specht_(SpechtRep::build(lambda)) {
  if (family_ == Family::S) throw InvalidT("cell modules exist for families A and L");
  if (t_ < 0) throw InvalidT("|lambda| exceeds n");
  basis_ = cell_basis_diagrams(family_, n_, t_);
  for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = i;
  dim_ = basis_.size() * specht_.dim();
}

const Matrix<Rational>& CellModule::perm_matrix(const Perm& s) const {
  auto it = perm_cache_.find(s);
  if (it != perm_cache_.end()) return it->second;
  return perm_cache_.emplace(s, specht_.action(s)).first->second;
}

std::vector<LaurentPoly> CellModule::act(const Diagram& d, std::size_t basis_index) const {
  if (d.n() != n_) throw StrandMismatch("act: diagram strand count differs from module");
  std::vector<LaurentPoly> out(dim_);
  const Diagram& a = basis_[diagram_index_of(basis_index)];
  const std::size_t j = tableau_index_of(basis_index);

  ComposeResult cr = compose(d, a);
  const int m = n_ - t_;
  if (cr.diagram.rank() < m) return out;  // zero in the quotient
  auto [b, sigma] = factor_noncrossing(cr.diagram, t_);
  auto it = index_.find(b);
  assert(it != index_.end());  // products stay inside the family's cell basis
  const Matrix<Rational>& rho = perm_matrix(sigma);
  for (std::size_t k = 0; k < specht_.dim(); ++k) {
    if (rho.at(k, j).is_zero()) continue;
    out[flat_index(it->second, k)] = LaurentPoly::monomial(cr.loops_total, rho.at(k, j));
  }
  return out;
}

Matrix<LaurentPoly> CellModule::action_matrix(const Diagram& d) const {
  Matrix<LaurentPoly> M(dim_, dim_);
  for (std::size_t c = 0; c < dim_; ++c) {
    std::vector<LaurentPoly> col = act(d, c);
    for (std::size_t r = 0; r < dim_; ++r)
      if (!col[r].is_zero()) M.at(r, c) = std::move(col[r]);
  }
  return M;
}

const std::vector<Diagram>& CellModule::acting_diagrams() const {
  if (acting_cache_.empty()) {
    const int m = n_ - t_;
    for (const Diagram& d : enumerate_family(family_, n_))
      if (d.rank() == m) acting_cache_.push_back(d);
  }
  return acting_cache_;
}

std::vector<std::vector<Rational>> CellModule::radical(const Rational& x0) const {
  if (x0.is_zero()) throw EvalAtZero("radical requires x0 != 0");

  // Joint kernel, refined one acting diagram at a time: K starts as the
  // full space and shrinks to the kernel of every specialized action.
  std::size_t kdim = dim_;
  Matrix<Rational> K = Matrix<Rational>::identity(dim_);
  for (const Diagram& d : acting_diagrams()) {
    if (kdim == 0) break;
    Matrix<Rational> A = eval_matrix(action_matrix(d), x0);
    Matrix<Rational> AK = A * K;
    if (AK.is_zero()) continue;
    std::vector<std::vector<Rational>> ker = kernel_basis(AK);
    Matrix<Rational> next(dim_, ker.size());
    for (std::size_t c = 0; c < ker.size(); ++c) {
      for (std::size_t r = 0; r < dim_; ++r) {
        Rational acc(0);
        for (std::size_t k = 0; k < kdim; ++k) {
          if (ker[c][k].is_zero()) continue;
          acc += K.at(r, k) * ker[c][k];
        }
        next.at(r, c) = acc;
      }
    }
    K = std::move(next);
    kdim = K.cols();
  }

  std::vector<std::vector<Rational>> basis(kdim, std::vector<Rational>(dim_));
  for (std::size_t c = 0; c < kdim; ++c)
    for (std::size_t r = 0; r < dim_; ++r) basis[c][r] = K.at(r, c);
  return basis;
}

bool CellModule::is_irreducible(const Rational& x0) const { return radical(x0).empty(); }

}  // namespace loopbrauer
