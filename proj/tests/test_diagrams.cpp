#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "loopbrauer/analysis.hpp"
#include "loopbrauer/diagram.hpp"
#include "loopbrauer/errors.hpp"

using namespace loopbrauer;

namespace {

// Independent oracle: |A_n| = number of involutions of S_{2n}, counted
// by brute force over all permutations.
long involutions_brute(int points) {
  std::vector<int> p(points);
  std::iota(p.begin(), p.end(), 0);
  long count = 0;
  do {
    bool inv = true;
    for (int i = 0; i < points && inv; ++i) inv = (p[p[i]] == i);
    if (inv) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

// Independent oracle: |L_n| = number of partial injections on n points.
long partial_injections(int n, int next, std::vector<bool>& used) {
  if (next == n) return 1;
  long total = partial_injections(n, next + 1, used);  // unmatched
  for (int j = 0; j < n; ++j) {
    if (used[j]) continue;
    used[j] = true;
    total += partial_injections(n, next + 1, used);
    used[j] = false;
  }
  return total;
}

long partial_injections(int n) {
  std::vector<bool> used(n, false);
  return partial_injections(n, 0, used);
}

// Independent oracle for i(t): enumerate matchings on t points directly.
long matchings_brute(std::vector<int>& state, int t) {
  int v = 0;
  while (v < t && state[v] >= 0) ++v;
  if (v == t) return 1;
  state[v] = v;
  long total = matchings_brute(state, t);
  state[v] = -1;
  for (int w = v + 1; w < t; ++w) {
    if (state[w] >= 0) continue;
    state[v] = w;
    state[w] = v;
    total += matchings_brute(state, t);
    state[v] = -1;
    state[w] = -1;
  }
  return total;
}

long matchings_brute(int t) {
  std::vector<int> state(t, -1);
  return matchings_brute(state, t);
}

Diagram random_diagram(std::mt19937_64& rng, const std::vector<Diagram>& pool) {
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  return pool[pick(rng)];
}

}  // namespace

TEST_CASE("compose examples at n = 2") {
  Diagram e1 = generator_e(1, 2), u1 = generator_u(1, 2), g1 = generator_g(1, 2);

  ComposeResult ee = compose(e1, e1);
  CHECK(ee.diagram == e1);
  CHECK(ee.loops_total == 1);
  CHECK(ee.loops_cycles == 1);
  CHECK(ee.loops_looplines == 0);

  ComposeResult gg = compose(g1, g1);
  CHECK(gg.diagram == Diagram::identity(2));
  CHECK(gg.loops_total == 0);

  ComposeResult uu = compose(u1, u1);
  CHECK(uu.diagram == u1);
  CHECK(uu.loops_total == 1);
  CHECK(uu.loops_cycles == 0);
  CHECK(uu.loops_looplines == 1);

  // u1 e1: loops on top 1,2 and the bottom arc (1',2'); no inner parts
  ComposeResult ue = compose(u1, e1);
  CHECK(ue.loops_total == 0);
  CHECK(ue.diagram == Diagram(2, {0, 1, 3, 2}));

  CHECK_THROWS_AS(compose(e1, generator_e(1, 3)), StrandMismatch);
}

TEST_CASE("star and embed") {
  for (int n : {2, 3, 4}) {
    for (int i = 1; i < n; ++i) {
      CHECK(generator_e(i, n).star() == generator_e(i, n));
      CHECK(generator_g(i, n).star() == generator_g(i, n));
    }
    CHECK(generator_u(n, n).star() == generator_u(n, n));
  }
  CHECK(Diagram::identity(1).embed() == Diagram::identity(2));
  CHECK(generator_u(1, 1).embed() == generator_u(1, 2));

  std::mt19937_64 rng(42);
  auto pool = enumerate_family(Family::A, 3);
  for (int it = 0; it < 100; ++it) {
    Diagram d = random_diagram(rng, pool);
    CHECK(d.star().star() == d);
    CHECK(d.embed().rank() == d.rank() + 1);
  }
}

TEST_CASE("rank") {
  CHECK(Diagram::identity(4).rank() == 4);
  CHECK(generator_e(2, 4).rank() == 2);
  CHECK(generator_u(3, 4).rank() == 3);
  CHECK(u_nt(3, 2).rank() == 1);
}

TEST_CASE("generators and u_nt pictures") {
  // u_{3,2}: vertical (1,1'), loops at 2, 3, 2', 3'
  CHECK(u_nt(3, 2) == Diagram(3, {3, 1, 2, 0, 4, 5}));
  CHECK(generator_e(1, 2) == Diagram(2, {1, 0, 3, 2}));
  CHECK(u_nt(4, 0) == Diagram::identity(4));
  CHECK_THROWS_AS(generator_e(0, 3), IndexOutOfRange);
  CHECK_THROWS_AS(generator_e(3, 3), IndexOutOfRange);
  CHECK_THROWS_AS(generator_u(5, 4), IndexOutOfRange);
  CHECK_THROWS_AS(u_nt(3, 4), InvalidT);
}

TEST_CASE("enumeration counts match the independent oracles and Eq-style formulas") {
  const long expect_a[] = {1, 2, 10, 76, 764};
  const long expect_l[] = {1, 2, 7, 34, 209};
  for (int n = 0; n <= 4; ++n) {
    auto fam_a = enumerate_family(Family::A, n);
    auto fam_l = enumerate_family(Family::L, n);
    CHECK(static_cast<long>(fam_a.size()) == expect_a[n]);
    CHECK(static_cast<long>(fam_l.size()) == expect_l[n]);
    if (n <= 3) CHECK(static_cast<long>(fam_a.size()) == involutions_brute(2 * n));
    CHECK(static_cast<long>(fam_l.size()) == partial_injections(n));
    CHECK(family_dimension_formula(Family::A, n) == fam_a.size());
    CHECK(family_dimension_formula(Family::L, n) == fam_l.size());
    CHECK(enumerate_family(Family::S, n).size() == factorial(n));

    // each exactly once, canonical order
    CHECK(std::is_sorted(fam_a.begin(), fam_a.end()));
    CHECK(std::adjacent_find(fam_a.begin(), fam_a.end()) == fam_a.end());
  }
}

TEST_CASE("family containments") {
  for (int n = 0; n <= 3; ++n) {
    auto a = enumerate_family(Family::A, n);
    auto l = enumerate_family(Family::L, n);
    auto s = enumerate_family(Family::S, n);
    CHECK(std::includes(a.begin(), a.end(), l.begin(), l.end()));
    CHECK(std::includes(l.begin(), l.end(), s.begin(), s.end()));
    for (const Diagram& d : l) CHECK(!d.has_horizontal_arc());
  }
}

TEST_CASE("cell basis diagrams") {
  CHECK(cell_basis_diagrams(Family::A, 2, 2).size() == 2);
  CHECK(cell_basis_diagrams(Family::L, 3, 1).size() == 3);
  CHECK(cell_basis_diagrams(Family::A, 3, 2).size() == 6);
  CHECK_THROWS_AS(cell_basis_diagrams(Family::A, 2, 3), InvalidT);

  for (int n = 0; n <= 4; ++n) {
    for (int t = 0; t <= n; ++t) {
      auto bl = cell_basis_diagrams(Family::L, n, t);
      auto ba = cell_basis_diagrams(Family::A, n, t);
      CHECK(bl.size() == binomial(n, t));
      CHECK(ba.size() == binomial(n, t) * matchings_brute(t));
      CHECK(static_cast<long>(partial_matching_count(t)) == matchings_brute(t));
      for (const Diagram& d : ba) {
        CHECK(d.rank() == n - t);
        CHECK(d.has_noncrossing_verticals());
        // bottom row is bot(u_{n,t})
        for (int j = 0; j < n; ++j) {
          if (j < n - t)
            CHECK(d.partner_of(n + j) < n);
          else
            CHECK(d.partner_of(n + j) == n + j);
        }
      }
    }
    // sum-of-squares dimension identity at the diagram level
    for (Family f : {Family::A, Family::L}) {
      mpz_class total = 0;
      for (int t = 0; t <= n; ++t) {
        mpz_class b = cell_basis_diagrams(f, n, t).size();
        total += b * b * factorial(n - t);
      }
      CHECK(total == enumerate_family(f, n).size());
    }
  }
}

TEST_CASE("factor_noncrossing") {
  // already noncrossing: identity permutation
  auto cells = cell_basis_diagrams(Family::A, 3, 1);
  for (const Diagram& c : cells) {
    auto [b, s] = factor_noncrossing(c, 1);
    CHECK(b == c);
    CHECK(s.is_identity());
  }

  // n=2, t=0, c = g1 -> (identity, transposition)
  auto [b, s] = factor_noncrossing(generator_g(1, 2), 0);
  CHECK(b == Diagram::identity(2));
  CHECK(s == Perm::transposition(2, 0, 1));

  CHECK_THROWS_AS(factor_noncrossing(generator_e(1, 2), 0), RankMismatch);
  CHECK_THROWS_AS(factor_noncrossing(generator_u(1, 2), 0), RankMismatch);
  // rank fits but the bottom row is not bot(u_{2,1})
  CHECK_THROWS_AS(factor_noncrossing(Diagram(2, {0, 3, 2, 1}), 1), BadBottomRow);

  // round trip: b . sigma reproduces c, with no inner components
  std::mt19937_64 rng(7);
  for (int n = 2; n <= 4; ++n)
    for (int t = 0; t <= n; ++t) {
      auto basis = cell_basis_diagrams(Family::A, n, t);
      auto perms = Perm::all(n - t);
      std::uniform_int_distribution<std::size_t> pb(0, basis.size() - 1), pp(0, perms.size() - 1);
      for (int it = 0; it < 20; ++it) {
        Diagram b0 = basis[pb(rng)];
        Perm s0 = perms[pp(rng)];
        ComposeResult cr = compose(b0, permutation_diagram(s0.extended(n)));
        CHECK(cr.loops_total == 0);
        auto [b1, s1] = factor_noncrossing(cr.diagram, t);
        CHECK(b1 == b0);
        CHECK(s1 == s0);
      }
    }
}

TEST_CASE("star anti-automorphism and inner component split") {
  std::mt19937_64 rng(2024);
  for (int n : {2, 3}) {
    auto pool = enumerate_family(Family::A, n);
    for (int it = 0; it < 300; ++it) {
      Diagram a = random_diagram(rng, pool), b = random_diagram(rng, pool);
      ComposeResult ab = compose(a, b);
      ComposeResult ba_star = compose(b.star(), a.star());
      CHECK(ab.loops_total == ba_star.loops_total);
      CHECK(ab.loops_cycles == ba_star.loops_cycles);
      CHECK(ab.loops_looplines == ba_star.loops_looplines);
      CHECK(ab.diagram.star() == ba_star.diagram);
      CHECK(ab.loops_total == ab.loops_cycles + ab.loops_looplines);
    }
  }
}

TEST_CASE("diagram text format round trip") {
  Diagram d = generator_e(1, 2);
  CHECK(d.str() == "2; 1 0 3 2");
  CHECK(Diagram::parse(d.str()) == d);
  CHECK_THROWS_AS(Diagram::parse("2; 1 0 3"), ParseError);
  CHECK_THROWS_AS(Diagram::parse("2; 1 0 3 3"), ParseError);
  CHECK_THROWS_AS(Diagram::parse("nope"), ParseError);
}

TEST_CASE("permutation diagram is a product homomorphism") {
  std::mt19937_64 rng(99);
  auto perms = Perm::all(4);
  std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
  for (int it = 0; it < 200; ++it) {
    Perm p = perms[pick(rng)], q = perms[pick(rng)];
    ComposeResult cr = compose(permutation_diagram(p), permutation_diagram(q));
    CHECK(cr.loops_total == 0);
    CHECK(cr.diagram == permutation_diagram(p.then(q)));
  }
}
