#include "loopbrauer/symgroup.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "loopbrauer/errors.hpp"

namespace loopbrauer {

int partition_size(const Partition& p) {
  int s = 0;
  for (int v : p) s += v;
  return s;
}

bool is_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 1) return false;
    if (i && p[i] > p[i - 1]) return false;
  }
  return true;
}

std::string partition_str(const Partition& p) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) os << ",";
    os << p[i];
  }
  os << ")";
  return os.str();
}

Partition partition_parse(const std::string& s) {
  Partition p;
  std::string body = s;
  if (!body.empty() && body.front() == '(') body = body.substr(1);
  if (!body.empty() && body.back() == ')') body.pop_back();
  if (body.empty()) return p;
  std::istringstream is(body);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    try {
      p.push_back(std::stoi(tok));
    } catch (...) {
      throw ParseError("bad partition part '" + tok + "'");
    }
  }
  if (!is_partition(p)) throw ParseError("parts of '" + s + "' are not weakly decreasing");
  return p;
}

namespace {

void gen_partitions(int m, int maxpart, Partition& acc, std::vector<Partition>& out) {
  if (m == 0) {
    out.push_back(acc);
    return;
  }
  for (int k = std::min(m, maxpart); k >= 1; --k) {
    acc.push_back(k);
    gen_partitions(m - k, k, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int m) {
  if (m < 0) throw IndexOutOfRange("partitions_of needs m >= 0");
  std::vector<Partition> out;
  Partition acc;
  gen_partitions(m, m == 0 ? 1 : m, acc, out);
  return out;
}

long contents_sum(const Partition& p) {
  long s = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (int j = 0; j < p[i]; ++j) s += j - static_cast<long>(i);
  return s;
}

std::pair<std::vector<Partition>, std::vector<Partition>> corners(const Partition& p) {
  std::vector<Partition> inner, outer;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i + 1 == p.size() || p[i] > p[i + 1]) {
      Partition q = p;
      if (--q[i] == 0) q.pop_back();
      inner.push_back(std::move(q));
    }
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i == 0 || p[i] < p[i - 1]) {
      Partition q = p;
      ++q[i];
      outer.push_back(std::move(q));
    }
  }
  Partition q = p;
  q.push_back(1);
  outer.push_back(std::move(q));
  return {inner, outer};
}

std::vector<Partition> branch_restrict(const Partition& p) { return corners(p).first; }
std::vector<Partition> branch_induce(const Partition& p) { return corners(p).second; }

mpz_class hook_dim(const Partition& p) {
  int m = partition_size(p);
  if (m == 0) return 1;
  int width = p.empty() ? 0 : p[0];
  std::vector<int> collen(width, 0);
  for (int v : p)
    for (int j = 0; j < v; ++j) ++collen[j];
  mpz_class hooks = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (int j = 0; j < p[i]; ++j) {
      int arm = p[i] - j - 1;
      int leg = collen[j] - static_cast<int>(i) - 1;
      hooks *= arm + leg + 1;
    }
  mpz_class f = factorial(m) / hooks;
  return f;
}

namespace {

// Beta-set (first-column hook length) form of a partition, descending.
std::vector<int> beta_set(const Partition& p) {
  int s = static_cast<int>(p.size());
  std::vector<int> b(s);
  for (int i = 0; i < s; ++i) b[i] = p[i] + (s - 1 - i);
  return b;
}

Partition partition_from_beta(std::vector<int> b) {
  std::sort(b.rbegin(), b.rend());
  int s = static_cast<int>(b.size());
  Partition p;
  for (int i = 0; i < s; ++i) {
    int part = b[i] - (s - 1 - i);
    if (part > 0) p.push_back(part);
  }
  return p;
}

mpz_class mn_rec(const Partition& lambda, const Partition& mu, std::size_t k) {
  if (k == mu.size()) {
    assert(partition_size(lambda) == 0);
    return 1;
  }
  int r = mu[k];
  std::vector<int> beta = beta_set(lambda);
  mpz_class total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    int target = beta[i] - r;
    if (target < 0) continue;
    bool occupied = false;
    int between = 0;
    for (std::size_t j = 0; j < beta.size(); ++j) {
      if (j == i) continue;
      if (beta[j] == target) occupied = true;
      if (beta[j] > target && beta[j] < beta[i]) ++between;
    }
    if (occupied) continue;
    std::vector<int> nb = beta;
    nb[i] = target;
    mpz_class sub = mn_rec(partition_from_beta(std::move(nb)), mu, k + 1);
    if (between % 2)
      total -= sub;
    else
      total += sub;
  }
  return total;
}

}  // namespace

mpz_class mn_character(const Partition& lambda, const Partition& mu) {
  if (partition_size(lambda) != partition_size(mu))
    throw InvalidShapes("character: |lambda| != |mu|");
  return mn_rec(lambda, mu, 0);
}

namespace {

void gen_tableaux(const Partition& p, int next, int m, std::vector<int>& fill,
                  Tableau& acc, std::vector<Tableau>& out) {
  if (next > m) {
    out.push_back(acc);
    return;
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (fill[i] >= p[i]) continue;
    if (i > 0 && fill[i - 1] <= fill[i]) continue;
    acc[i].push_back(next);
    ++fill[i];
    gen_tableaux(p, next + 1, m, fill, acc, out);
    --fill[i];
    acc[i].pop_back();
  }
}

}  // namespace

std::vector<Tableau> standard_tableaux(const Partition& p) {
  std::vector<Tableau> out;
  int m = partition_size(p);
  std::vector<int> fill(p.size(), 0);
  Tableau acc(p.size());
  gen_tableaux(p, 1, m, fill, acc, out);
  return out;
}

SpechtRep SpechtRep::build(const Partition& lambda) {
  if (!is_partition(lambda)) throw InvalidShapes("not a partition: " + partition_str(lambda));
  SpechtRep rep;
  rep.lambda_ = lambda;
  rep.m_ = partition_size(lambda);
  rep.tableaux_ = standard_tableaux(lambda);
  rep.dim_ = rep.tableaux_.size();
  assert(mpz_class(rep.dim_) == hook_dim(lambda));

  // row_of[t][k] = row of entry k+1 in tableau t; the row word also
  // serves as the lookup key for the swapped tableau.
  std::vector<std::vector<int>> row_of(rep.dim_, std::vector<int>(rep.m_));
  std::vector<std::vector<int>> col_of(rep.dim_, std::vector<int>(rep.m_));
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t t = 0; t < rep.dim_; ++t) {
    for (std::size_t i = 0; i < rep.tableaux_[t].size(); ++i)
      for (std::size_t j = 0; j < rep.tableaux_[t][i].size(); ++j) {
        row_of[t][rep.tableaux_[t][i][j] - 1] = static_cast<int>(i);
        col_of[t][rep.tableaux_[t][i][j] - 1] = static_cast<int>(j);
      }
    index[row_of[t]] = t;
  }

  for (int g = 0; g + 1 < rep.m_; ++g) {
    // s_g swaps the entries g+1 and g+2.
    Matrix<Rational> M(rep.dim_, rep.dim_);
    for (std::size_t t = 0; t < rep.dim_; ++t) {
      int ra = row_of[t][g], ca = col_of[t][g];
      int rb = row_of[t][g + 1], cb = col_of[t][g + 1];
      if (ra == rb) {
        M.at(t, t) = Rational(1);
      } else if (ca == cb) {
        M.at(t, t) = Rational(-1);
      } else {
        long d = (cb - rb) - (ca - ra);  // axial distance, |d| >= 2
        std::vector<int> swapped = row_of[t];
        std::swap(swapped[g], swapped[g + 1]);
        std::size_t t2 = index.at(swapped);
        Rational dd(d);
        M.at(t, t) = dd.inverse();
        M.at(t2, t) = d > 0 ? Rational(1) : Rational(1) - (dd * dd).inverse();
      }
    }
    rep.gen_.push_back(std::move(M));
  }
  return rep;
}

Matrix<Rational> SpechtRep::action(const Perm& s) const {
  if (s.size() != m_) throw IndexOutOfRange("perm degree does not match the module");
  Matrix<Rational> M = Matrix<Rational>::identity(dim_);
  for (int i : s.adjacent_word()) M = M * gen_[i];
  return M;
}

InducedVector induced_action(const SpechtRep& rho, const Perm& sigma, const InducedVector& v) {
  const int m = rho.m();
  const int big = m + 1;
  if (sigma.size() != big) throw IndexOutOfRange("induced action needs sigma in S_{m+1}");
  if (v.j < 1 || v.j > big) throw IndexOutOfRange("induced basis index out of range");
  if (v.w.size() != rho.dim()) throw IndexOutOfRange("induced vector has wrong length");

  auto tau = [&](int j0) {
    return j0 == m ? Perm(big) : Perm::transposition(big, j0, m);
  };

  int j0 = v.j - 1;
  int s0 = sigma.inverse()(j0);
  Perm h_big = tau(s0).then(sigma).then(tau(j0));
  assert(h_big(m) == m);
  std::vector<int> small(h_big.images().begin(), h_big.images().end() - 1);
  Matrix<Rational> M = rho.action(Perm(small));

  InducedVector out;
  out.j = s0 + 1;
  out.w.assign(rho.dim(), Rational(0));
  for (std::size_t r = 0; r < rho.dim(); ++r)
    for (std::size_t c = 0; c < rho.dim(); ++c) out.w[r] += M.at(r, c) * v.w[c];
  return out;
}

}  // namespace loopbrauer
