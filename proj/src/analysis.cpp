#include "loopbrauer/analysis.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "loopbrauer/errors.hpp"
#include "loopbrauer/workpool.hpp"

namespace loopbrauer {

namespace {

long cell_dim(Family f, int n, const Partition& lambda) {
  int t = n - partition_size(lambda);
  if (t < 0) throw InvalidT("cell_dim: |lambda| exceeds n");
  mpz_class b = binomial(n, t);
  if (f == Family::A) b *= partial_matching_count(t);
  mpz_class d = b * hook_dim(lambda);
  return d.get_si();
}

}  // namespace

BranchReport branching_check(Family family, int n, const Partition& lambda) {
  BranchReport rep;
  rep.family = family;
  rep.n = n;
  rep.lambda = lambda;
  rep.t = n - partition_size(lambda);
  if (rep.t < 1 || rep.t > n) throw InvalidT("branching_check needs 1 <= t <= n");

  rep.lhs_dim = cell_dim(family, n, lambda);

  long sub_sum = 0;
  for (const Partition& alpha : branch_restrict(lambda)) {
    long d = cell_dim(family, n - 1, alpha);
    rep.sub_terms.push_back({alpha, d});
    sub_sum += d;
  }
  {
    long d = cell_dim(family, n - 1, lambda);  // alpha = lambda (loop at n)
    rep.sub_terms.push_back({lambda, d});
    sub_sum += d;
  }

  long quot_sum = 0;
  if (family == Family::A && rep.t >= 2) {
    for (const Partition& beta : branch_induce(lambda)) {
      long d = cell_dim(family, n - 1, beta);
      rep.quot_terms.push_back({beta, d});
      quot_sum += d;
    }
  }
  rep.dimension_ok = (rep.lhs_dim == sub_sum + quot_sum);

  // Submodule witness: basis vectors whose diagram has no horizontal
  // arc at top vertex n (vertical there -> F1, loop there -> F2).
  CellModule mod(family, n, lambda);
  const int m = n - rep.t;
  std::set<std::size_t> witness;
  for (std::size_t i = 0; i < mod.diagram_basis().size(); ++i) {
    const Diagram& a = mod.diagram_basis()[i];
    int p = a.partner_of(n - 1);
    if (p == n - 1 || p >= n) witness.insert(i);
  }
  rep.witness_dim = static_cast<long>(witness.size() * mod.f_dim());

  // Generators of the embedded algebra one level down: S_{n-1} and the
  // u_j for both families, plus the e_i only inside the full family A.
  std::vector<Diagram> gens;
  for (int i = 1; i <= n - 2; ++i) {
    gens.push_back(permutation_diagram(Perm::adjacent(n, i - 1)));
    if (family == Family::A) gens.push_back(generator_e(i, n));
  }
  for (int j = 1; j <= n - 1; ++j) gens.push_back(generator_u(j, n));

  bool invariant = true;
  for (const Diagram& g : gens) {
    for (std::size_t i : witness) {
      ComposeResult cr = compose(g, mod.diagram_basis()[i]);
      if (cr.diagram.rank() < m) continue;  // zero stays inside
      auto [b, sigma] = factor_noncrossing(cr.diagram, rep.t);
      (void)sigma;
      auto& basis = mod.diagram_basis();
      std::size_t bi = std::lower_bound(basis.begin(), basis.end(), b) - basis.begin();
      if (!witness.count(bi)) {
        invariant = false;
        break;
      }
    }
    if (!invariant) break;
  }
  rep.witness_ok = invariant && (rep.witness_dim == sub_sum);
  return rep;
}

IndResReport ind_res_check(Family family, int n, const Partition& lambda) {
  IndResReport rep;
  rep.family = family;
  rep.n = n;
  rep.lambda = lambda;
  rep.t = n - partition_size(lambda);
  if (rep.t < 0 || rep.t > n) throw InvalidT("ind_res_check needs 0 <= t <= n");

  rep.lhs_dim = cell_dim(family, n + 2, lambda);

  long sub_sum = 0;
  for (const Partition& alpha : branch_restrict(lambda)) {
    long d = cell_dim(family, n + 1, alpha);
    rep.sub_terms.push_back({alpha, d});
    sub_sum += d;
  }
  {
    long d = cell_dim(family, n + 1, lambda);
    rep.sub_terms.push_back({lambda, d});
    sub_sum += d;
  }

  long quot_sum = 0;
  if (family == Family::A) {
    for (const Partition& beta : branch_induce(lambda)) {
      long d = cell_dim(family, n + 1, beta);
      rep.quot_terms.push_back({beta, d});
      quot_sum += d;
    }
  }
  rep.dimension_ok = (rep.lhs_dim == sub_sum + quot_sum);
  return rep;
}

namespace {

Matrix<LaurentPoly> element_action(const CellModule& mod, const AlgebraElement& a) {
  Matrix<LaurentPoly> M(mod.dim(), mod.dim());
  for (const auto& [d, c] : a.coeffs()) M = M + c * mod.action_matrix(d);
  return M;
}

// Sum of u_{i_1} ... u_{i_t} over all t-subsets, built by exact
// products of the generators.
AlgebraElement u_subset_sum(int n, int t) {
  AlgebraElement total(n);
  std::vector<int> comb(t);
  for (int i = 0; i < t; ++i) comb[i] = i + 1;
  if (t == 0) return AlgebraElement(Diagram::identity(n));
  while (true) {
    AlgebraElement prod(Diagram::identity(n));
    for (int i : comb) prod = multiply(prod, AlgebraElement(generator_u(i, n)));
    total += prod;

    int k = t - 1;
    while (k >= 0 && comb[k] == n - t + k + 1) --k;
    if (k < 0) break;
    ++comb[k];
    for (int j = k + 1; j < t; ++j) comb[j] = comb[j - 1] + 1;
  }
  return total;
}

}  // namespace

CentralReport central_checks(Family family, int n) {
  CentralReport rep;
  rep.family = family;
  rep.n = n;

  auto add = [&rep](std::string name, bool pass) {
    rep.checks.push_back({std::move(name), pass});
  };

  if (family == Family::L) {
    for (int t = 1; t <= n; ++t) {
      AlgebraElement Ut = u_subset_sum(n, t);
      for (const Partition& mu : partitions_of(n - t)) {
        CellModule mod(Family::L, n, mu);
        Matrix<LaurentPoly> M = element_action(mod, Ut);
        Matrix<LaurentPoly> expect =
            LaurentPoly::monomial(t) * Matrix<LaurentPoly>::identity(mod.dim());
        add("U_" + std::to_string(t) + " = x^" + std::to_string(t) + " id on M_L" +
                partition_str(mu),
            M == expect);
      }
    }
    return rep;
  }

  // Family A.
  if (n >= 1) {
    AlgebraElement U1 = u_subset_sum(n, 1);
    for (const Partition& mu : partitions_of(n - 1)) {
      CellModule mod(Family::A, n, mu);
      Matrix<LaurentPoly> M = element_action(mod, U1);
      Matrix<LaurentPoly> expect =
          LaurentPoly::monomial(1) * Matrix<LaurentPoly>::identity(mod.dim());
      add("U_1 = x id on M_A" + partition_str(mu), M == expect);
    }
  }
  if (n < 2) return rep;

  AlgebraElement U2 = u_subset_sum(n, 2);
  AlgebraElement V2(n), H2(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      V2 += AlgebraElement(diagram_v(i, j, n));
      H2 += AlgebraElement(diagram_h(i, j, n));
    }

  for (const Partition& mu : partitions_of(n - 2)) {
    CellModule mod(Family::A, n, mu);
    const std::size_t dim = mod.dim();
    const std::size_t f = mod.f_dim();

    // cap = top horizontal arc present, circ = two spare loops; the g
    // involution swaps the partners with the same loop/arc support.
    std::vector<std::size_t> g_partner(mod.diagram_basis().size());
    std::vector<bool> is_cap(mod.diagram_basis().size());
    for (std::size_t i = 0; i < mod.diagram_basis().size(); ++i) {
      const Diagram& d = mod.diagram_basis()[i];
      is_cap[i] = d.has_horizontal_arc();
      std::vector<int> partner = d.partner();
      std::vector<int> spare;
      for (int v = 0; v < n; ++v)
        if (d.partner_of(v) < n) spare.push_back(v);  // loop or horizontal
      assert(spare.size() == 2);
      if (is_cap[i]) {
        partner[spare[0]] = spare[0];
        partner[spare[1]] = spare[1];
      } else {
        partner[spare[0]] = spare[1];
        partner[spare[1]] = spare[0];
      }
      Diagram flipped(n, partner);
      auto& basis = mod.diagram_basis();
      g_partner[i] = std::lower_bound(basis.begin(), basis.end(), flipped) - basis.begin();
    }

    auto blocks = [&](const LaurentPoly& cap_to_cap, const LaurentPoly& cap_to_circ,
                      const LaurentPoly& circ_to_cap, const LaurentPoly& circ_to_circ) {
      Matrix<LaurentPoly> M(dim, dim);
      for (std::size_t i = 0; i < mod.diagram_basis().size(); ++i)
        for (std::size_t k = 0; k < f; ++k) {
          std::size_t col = mod.flat_index(i, k);
          std::size_t same = mod.flat_index(i, k);
          std::size_t flip = mod.flat_index(g_partner[i], k);
          if (is_cap[i]) {
            M.at(same, col) += cap_to_cap;
            M.at(flip, col) += cap_to_circ;
          } else {
            M.at(same, col) += circ_to_circ;
            M.at(flip, col) += circ_to_cap;
          }
        }
      return M;
    };

    const LaurentPoly zero, x1 = LaurentPoly::monomial(1), x2 = LaurentPoly::monomial(2);

    add("U_2 (cap -> x circ, circ -> x^2 circ) on M_A" + partition_str(mu),
        element_action(mod, U2) == blocks(zero, x1, zero, x2));
    add("V_2 (cap -> x cap, circ -> x^2 cap) on M_A" + partition_str(mu),
        element_action(mod, V2) == blocks(x1, zero, x2, zero));

    Matrix<LaurentPoly> MH = element_action(mod, H2);

    // H_2 circ columns: x times the flipped cap vector.
    bool circ_ok = true;
    for (std::size_t i = 0; i < mod.diagram_basis().size() && circ_ok; ++i) {
      if (is_cap[i]) continue;
      for (std::size_t k = 0; k < f && circ_ok; ++k) {
        std::size_t col = mod.flat_index(i, k);
        for (std::size_t r = 0; r < dim && circ_ok; ++r) {
          LaurentPoly expect =
              (r == mod.flat_index(g_partner[i], k)) ? x1 : zero;
          if (!(MH.at(r, col) == expect)) circ_ok = false;
        }
      }
    }
    add("H_2 circ -> x cap on M_A" + partition_str(mu), circ_ok);

    // H_2 cap block: (x - 1) id + sum of left transpositions minus the
    // right S_{n-2} transposition sum on the Specht factor.
    std::vector<std::size_t> cap_flat;
    for (std::size_t i = 0; i < mod.diagram_basis().size(); ++i)
      if (is_cap[i])
        for (std::size_t k = 0; k < f; ++k) cap_flat.push_back(mod.flat_index(i, k));

    Matrix<LaurentPoly> left_sum(dim, dim);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        left_sum =
            left_sum + mod.action_matrix(permutation_diagram(Perm::transposition(n, i - 1, j - 1)));

    Matrix<Rational> right_specht(f, f);
    for (int a = 0; a < n - 2; ++a)
      for (int b = a + 1; b < n - 2; ++b) {
        Matrix<Rational> T = mod.specht().action(Perm::transposition(n - 2, a, b));
        right_specht = right_specht + T;
      }

    auto sub = [&](const Matrix<LaurentPoly>& M) {
      Matrix<LaurentPoly> S(cap_flat.size(), cap_flat.size());
      for (std::size_t r = 0; r < cap_flat.size(); ++r)
        for (std::size_t c = 0; c < cap_flat.size(); ++c) S.at(r, c) = M.at(cap_flat[r], cap_flat[c]);
      return S;
    };

    Matrix<LaurentPoly> rhs =
        (x1 - LaurentPoly(1)) * Matrix<LaurentPoly>::identity(cap_flat.size()) + sub(left_sum);
    // subtract the blockwise right action
    for (std::size_t r = 0; r < cap_flat.size(); ++r)
      for (std::size_t c = 0; c < cap_flat.size(); ++c) {
        std::size_t di = cap_flat[r] / f, dj = cap_flat[c] / f;
        if (di != dj) continue;
        rhs.at(r, c) -= LaurentPoly(right_specht.at(cap_flat[r] % f, cap_flat[c] % f));
      }

    // H_2 must also keep the cap block inside itself.
    bool cap_closed = true;
    for (std::size_t col : cap_flat)
      for (std::size_t i = 0; i < mod.diagram_basis().size(); ++i) {
        if (is_cap[i]) continue;
        for (std::size_t k = 0; k < f; ++k)
          if (!(MH.at(mod.flat_index(i, k), col) == zero)) cap_closed = false;
      }

    add("H_2 cap block = (x-1) id + sum tau - sum tau~ on M_A" + partition_str(mu),
        cap_closed && sub(MH) == rhs);
  }
  return rep;
}

bool class_sum_is_content_scalar(const Partition& lambda) {
  SpechtRep rep = SpechtRep::build(lambda);
  int m = rep.m();
  Matrix<Rational> sum(rep.dim(), rep.dim());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) sum = sum + rep.action(Perm::transposition(m, i, j));
  Matrix<Rational> expect = Rational(contents_sum(lambda)) * Matrix<Rational>::identity(rep.dim());
  return sum == expect;
}

Rational content_identity(const Partition& lambda, const Partition& mu, int h,
                          DegenerateCase kind) {
  if (!is_partition(lambda) || !is_partition(mu)) throw InvalidShapes("not a partition");
  if (h != 1 && h != 2) throw InvalidShapes("h must be 1 or 2");
  if (partition_size(lambda) - partition_size(mu) != h)
    throw InvalidShapes("|lambda| - |mu| must equal h");
  if (h == 1) return Rational(0);
  long base = (kind == DegenerateCase::Mixed) ? 2 : 1;
  return Rational(base - contents_sum(lambda) + contents_sum(mu));
}

std::vector<Rational> content_candidates(int n) {
  std::set<Rational> vals;
  for (int m = 1; m <= n; ++m)
    for (const Partition& lambda : partitions_of(m))
      for (int h = 1; h <= 2; ++h) {
        if (m - h < 0) continue;
        for (const Partition& mu : partitions_of(m - h)) {
          vals.insert(content_identity(lambda, mu, h, DegenerateCase::Mixed));
          vals.insert(content_identity(lambda, mu, h, DegenerateCase::CapOnly));
        }
      }
  return std::vector<Rational>(vals.begin(), vals.end());
}

ProbeReport radical_scan(Family family, int n, const std::vector<Rational>& x0s, int jobs) {
  ProbeReport rep;
  rep.family = family;
  rep.n = n;
  rep.x0s = x0s;
  for (const Rational& x0 : x0s)
    if (x0.is_zero()) throw EvalAtZero("radical_scan requires nonzero x0");

  std::vector<Rational> candidates = content_candidates(n);
  auto is_candidate = [&candidates](const Rational& x) {
    return std::find(candidates.begin(), candidates.end(), x) != candidates.end();
  };

  struct Job {
    int t;
    Partition lambda;
    Rational x0;
  };
  std::vector<Job> jobs_list;
  for (int t = 0; t <= n; ++t)
    for (const Partition& lambda : partitions_of(n - t))
      for (const Rational& x0 : x0s) jobs_list.push_back({t, lambda, x0});

  rep.probes.resize(jobs_list.size());
  parallel_for(jobs_list.size(), jobs, [&](std::size_t k) {
    const Job& job = jobs_list[k];
    CellModule mod(family, n, job.lambda);
    RadicalProbe probe;
    probe.t = job.t;
    probe.lambda = job.lambda;
    probe.x0 = job.x0;
    probe.module_dim = mod.dim();
    probe.radical_dim = mod.radical(job.x0).size();
    probe.candidate_match = probe.radical_dim > 0 && is_candidate(job.x0);
    rep.probes[k] = std::move(probe);
  });

  for (const RadicalProbe& p : rep.probes)
    if (p.radical_dim != 0) rep.all_zero = false;
  return rep;
}

mpz_class cell_dim_square_sum(Family family, int n) {
  mpz_class total = 0;
  for (int t = 0; t <= n; ++t)
    for (const Partition& lambda : partitions_of(n - t)) {
      mpz_class d = cell_dim(family, n, lambda);
      total += d * d;
    }
  return total;
}

mpz_class family_dimension_formula(Family family, int n) {
  mpz_class total = 0;
  if (family == Family::A) {
    // sum_j C(2n, 2j) (2(n-j) - 1)!!, the 2j looped vertices choosing
    // themselves and the rest a perfect matching
    for (int j = 0; j <= n; ++j) {
      mpz_class matchings = 1;
      for (int i = 0; i < n - j; ++i) matchings *= 2 * (n - j) - 1 - 2 * i;
      total += binomial(2 * n, 2 * j) * matchings;
    }
  } else if (family == Family::L) {
    for (int j = 0; j <= n; ++j) total += binomial(n, j) * binomial(n, j) * factorial(n - j);
  } else {
    total = factorial(n);
  }
  return total;
}

}  // namespace loopbrauer
