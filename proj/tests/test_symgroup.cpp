#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "loopbrauer/errors.hpp"
#include "loopbrauer/symgroup.hpp"

using namespace loopbrauer;

namespace {

// Conjugacy class representative of cycle type mu: consecutive cycles.
Perm class_representative(const Partition& mu) {
  int m = partition_size(mu);
  std::vector<int> img(m);
  int base = 0;
  for (int part : mu) {
    for (int k = 0; k < part; ++k) img[base + k] = base + (k + 1) % part;
    base += part;
  }
  return Perm(img);
}

Rational trace(const Matrix<Rational>& m) {
  Rational t(0);
  for (std::size_t i = 0; i < m.rows(); ++i) t += m.at(i, i);
  return t;
}

}  // namespace

TEST_CASE("perm basics") {
  Perm s0 = Perm::adjacent(3, 0);
  Perm s1 = Perm::adjacent(3, 1);
  CHECK(s0.then(s0).is_identity());
  // "apply s0 first, then s1": 0 -> 1 -> 2
  CHECK(s0.then(s1)(0) == 2);
  CHECK(s0.inverse() == s0);
  for (const Perm& p : Perm::all(4)) {
    // adjacent_word rebuilds the permutation in then-order
    Perm acc(4);
    for (int i : p.adjacent_word()) acc = acc.then(Perm::adjacent(4, i));
    CHECK(acc == p);
    CHECK(p.then(p.inverse()).is_identity());
  }
  CHECK(Perm::all(4).size() == 24);
}

TEST_CASE("partitions_of") {
  CHECK(partitions_of(0) == std::vector<Partition>{{}});
  CHECK(partitions_of(3) == std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}});
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(6).size() == 11);
  for (const Partition& p : partitions_of(5)) CHECK(is_partition(p));
}

TEST_CASE("contents_sum") {
  CHECK(contents_sum({4}) == 6);          // n(n-1)/2
  CHECK(contents_sum({1, 1, 1, 1}) == -6);
  CHECK(contents_sum({2, 1}) == 0);       // cells 0, 1, -1
  CHECK(contents_sum({}) == 0);
}

TEST_CASE("corners") {
  auto [inner, outer] = corners({2, 1});
  CHECK(inner == std::vector<Partition>{{1, 1}, {2}});
  CHECK(outer == std::vector<Partition>{{3, 1}, {2, 2}, {2, 1, 1}});

  auto [i0, o0] = corners({});
  CHECK(i0.empty());
  CHECK(o0 == std::vector<Partition>{{1}});

  auto [i1, o1] = corners({3});
  CHECK(i1 == std::vector<Partition>{{2}});
  CHECK(o1 == std::vector<Partition>{{4}, {3, 1}});
}

TEST_CASE("hook dimensions and tableaux counts") {
  CHECK(hook_dim({2, 1}) == 2);
  CHECK(hook_dim({5}) == 1);
  CHECK(hook_dim({2, 2}) == 2);
  CHECK(hook_dim({}) == 1);
  for (int m = 0; m <= 6; ++m)
    for (const Partition& p : partitions_of(m))
      CHECK(hook_dim(p) == standard_tableaux(p).size());
}

TEST_CASE("specht generator matrices satisfy the Coxeter presentation") {
  for (int m = 0; m <= 6; ++m) {
    for (const Partition& p : partitions_of(m)) {
      SpechtRep rep = SpechtRep::build(p);
      auto I = Matrix<Rational>::identity(rep.dim());
      for (int i = 0; i + 1 < m; ++i) CHECK(rep.gen(i) * rep.gen(i) == I);
      for (int i = 0; i + 2 < m; ++i)
        CHECK(rep.gen(i) * rep.gen(i + 1) * rep.gen(i) ==
              rep.gen(i + 1) * rep.gen(i) * rep.gen(i + 1));
      for (int i = 0; i + 1 < m; ++i)
        for (int j = i + 2; j + 1 < m; ++j) CHECK(rep.gen(i) * rep.gen(j) == rep.gen(j) * rep.gen(i));
    }
  }
}

TEST_CASE("perm_action is a then-homomorphism, identity is identity") {
  std::mt19937_64 rng(17);
  for (const Partition& p : partitions_of(4)) {
    SpechtRep rep = SpechtRep::build(p);
    CHECK(rep.action(Perm(4)) == Matrix<Rational>::identity(rep.dim()));
    auto perms = Perm::all(4);
    std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
    for (int it = 0; it < 40; ++it) {
      Perm a = perms[pick(rng)], b = perms[pick(rng)];
      CHECK(rep.action(a.then(b)) == rep.action(a) * rep.action(b));
    }
  }
}

TEST_CASE("characters match Murnaghan-Nakayama") {
  for (int m = 1; m <= 4; ++m) {
    for (const Partition& lambda : partitions_of(m)) {
      SpechtRep rep = SpechtRep::build(lambda);
      for (const Partition& mu : partitions_of(m)) {
        Rational tr = trace(rep.action(class_representative(mu)));
        CHECK(tr == Rational(mn_character(lambda, mu)));
      }
    }
  }
}

TEST_CASE("Murnaghan-Nakayama table spot checks") {
  // chi^{(2,1)} on classes (1^3), (2,1), (3): 2, 0, -1
  CHECK(mn_character({2, 1}, {1, 1, 1}) == 2);
  CHECK(mn_character({2, 1}, {2, 1}) == 0);
  CHECK(mn_character({2, 1}, {3}) == -1);
  // sign character
  CHECK(mn_character({1, 1, 1, 1}, {4}) == -1);
  CHECK(mn_character({1, 1, 1, 1}, {2, 2}) == 1);
  CHECK(mn_character({4}, {2, 1, 1}) == 1);
}

TEST_CASE("transposition class sum acts as the content scalar") {
  for (int m = 0; m <= 5; ++m) {
    for (const Partition& lambda : partitions_of(m)) {
      SpechtRep rep = SpechtRep::build(lambda);
      Matrix<Rational> sum(rep.dim(), rep.dim());
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) sum = sum + rep.action(Perm::transposition(m, i, j));
      CHECK(sum == Rational(contents_sum(lambda)) * Matrix<Rational>::identity(rep.dim()));
    }
  }
}

TEST_CASE("branching with dimension bookkeeping") {
  CHECK(branch_restrict({2, 1}) == std::vector<Partition>{{1, 1}, {2}});
  CHECK(branch_induce({1}) == std::vector<Partition>{{2}, {1, 1}});
  CHECK(branch_restrict({4}) == std::vector<Partition>{{3}});
  for (int m = 1; m <= 6; ++m)
    for (const Partition& p : partitions_of(m)) {
      mpz_class down = 0, up = 0;
      for (const Partition& q : branch_restrict(p)) down += hook_dim(q);
      for (const Partition& q : branch_induce(p)) up += hook_dim(q);
      CHECK(down == hook_dim(p));
      CHECK(up == (m + 1) * hook_dim(p));
    }
}

TEST_CASE("induced action") {
  // lambda |- m, induced basis (w, j) for j in 1..m+1
  Partition lambda{2, 1};
  SpechtRep rep = SpechtRep::build(lambda);
  const int m = 3;

  std::vector<Rational> w{Rational(1), Rational(2)};
  InducedVector v{w, 2};

  // identity fixes everything
  InducedVector r = induced_action(rep, Perm(m + 1), v);
  CHECK(r.j == 2);
  CHECK(r.w == w);

  // tau_k moves (w, m+1) to (w, k)
  for (int k = 1; k <= m; ++k) {
    InducedVector vk{w, m + 1};
    InducedVector rk = induced_action(rep, Perm::transposition(m + 1, k - 1, m), vk);
    CHECK(rk.j == k);
    CHECK(rk.w == w);
  }

  // module axiom, outer element leading the then-chain:
  // act(b, act(a, v)) = act(b.then(a), v), mirroring diagram stacking
  std::mt19937_64 rng(31);
  auto perms = Perm::all(m + 1);
  std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
  std::uniform_int_distribution<int> js(1, m + 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int it = 0; it < 150; ++it) {
    Perm a = perms[pick(rng)], b = perms[pick(rng)];
    InducedVector start{{Rational(coef(rng)), Rational(coef(rng))}, js(rng)};
    InducedVector lhs = induced_action(rep, b, induced_action(rep, a, start));
    InducedVector rhs = induced_action(rep, b.then(a), start);
    CHECK(lhs.j == rhs.j);
    CHECK(lhs.w == rhs.w);
  }

  // total dimension of the induced module is (m+1) f^lambda
  CHECK((m + 1) * rep.dim() == 8);
}
