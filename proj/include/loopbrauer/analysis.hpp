#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "loopbrauer/cellmod.hpp"
#include "loopbrauer/diagram.hpp"
#include "loopbrauer/rational.hpp"
#include "loopbrauer/symgroup.hpp"

namespace loopbrauer {

// ---------------------------------------------------------------------
// Restriction branching: dim M_{X_n}(lambda) against the sub terms
// (alpha = lambda or one box removed, at n-1) plus, for family A with
// t >= 2, the quotient terms (one box added). The sub part is also
// witnessed concretely: the span of basis vectors whose diagram keeps
// top vertex n off any horizontal arc is invariant under the embedded
// X_{n-1} generators.

struct BranchTerm {
  Partition shape;
  long dim = 0;
};

struct BranchReport {
  Family family = Family::A;
  int n = 0;
  int t = 0;
  Partition lambda;
  long lhs_dim = 0;
  std::vector<BranchTerm> sub_terms;
  std::vector<BranchTerm> quot_terms;
  long witness_dim = 0;
  bool dimension_ok = false;
  bool witness_ok = false;
  bool ok() const { return dimension_ok && witness_ok; }
};

BranchReport branching_check(Family family, int n, const Partition& lambda);

// ---------------------------------------------------------------------
// Induction = restriction two levels up, verified at dimension level:
// dim M_{X_{n+2}}(lambda) against the branching terms at n+1.

struct IndResReport {
  Family family = Family::A;
  int n = 0;
  int t = 0;
  Partition lambda;
  long lhs_dim = 0;
  std::vector<BranchTerm> sub_terms;
  std::vector<BranchTerm> quot_terms;
  bool dimension_ok = false;
};

IndResReport ind_res_check(Family family, int n, const Partition& lambda);

// ---------------------------------------------------------------------
// Central-element identities, symbolic in x.

struct CentralIdentity {
  std::string name;
  bool pass = false;
};

struct CentralReport {
  Family family = Family::A;
  int n = 0;
  std::vector<CentralIdentity> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Family L: U_t acts as x^t id on M_L(mu) for every t and mu |- n-t.
/// Family A: U_1 = x id on M_A(mu |- n-1), and the U_2 / V_2 / H_2
/// block identities on M_A(mu |- n-2), including the H_2 cap-block
/// matrix equation (x-1) id + sum tau - sum tau~.
CentralReport central_checks(Family family, int n);

/// Sum of all transposition matrices on S^lambda equals the content
/// sum times the identity.
bool class_sum_is_content_scalar(const Partition& lambda);

// ---------------------------------------------------------------------
// Degenerate-parameter candidates from the content identity.

enum class DegenerateCase { Mixed, CapOnly };

/// The integer x at which the h-step embedding obstruction degenerates:
/// h = 2 mixed: x = 2 - sum c(lambda) + sum c(mu);
/// h = 2 cap-only: x = 1 - sum c(lambda) + sum c(mu);
/// h = 1: x = 0.
Rational content_identity(const Partition& lambda, const Partition& mu, int h,
                          DegenerateCase kind = DegenerateCase::Mixed);

/// All candidate values for modules at strand count n.
std::vector<Rational> content_candidates(int n);

// ---------------------------------------------------------------------
// Radical probes.

struct RadicalProbe {
  int t = 0;
  Partition lambda;
  Rational x0;
  std::size_t module_dim = 0;
  std::size_t radical_dim = 0;
  bool candidate_match = false;  // nonzero radical at a content-identity x
};

struct ProbeReport {
  Family family = Family::A;
  int n = 0;
  std::vector<Rational> x0s;
  std::vector<RadicalProbe> probes;  // ordered by (t, lambda, x0)
  bool all_zero = true;
};

ProbeReport radical_scan(Family family, int n, const std::vector<Rational>& x0s, int jobs = 1);

/// Sum over all (t, lambda) of dim(M)^2; equals the algebra dimension
/// when the specialization is semisimple, and generically.
mpz_class cell_dim_square_sum(Family family, int n);

/// |A_n| or |L_n| by the closed formula.
mpz_class family_dimension_formula(Family family, int n);

}  // namespace loopbrauer
