#include "loopbrauer/diagram.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "loopbrauer/errors.hpp"

namespace loopbrauer {

char family_char(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::L: return 'L';
    case Family::S: return 'S';
  }
  return '?';
}

Family family_from_char(char c) {
  switch (c) {
    case 'A': return Family::A;
    case 'L': return Family::L;
    case 'S': return Family::S;
  }
  throw ParseError(std::string("unknown family '") + c + "'");
}

Diagram::Diagram(int n, std::vector<int> partner) : n_(n), partner_(std::move(partner)) {
  if (n_ < 0 || partner_.size() != static_cast<std::size_t>(2 * n_))
    throw IndexOutOfRange("partner array size must be 2n");
  for (int e = 0; e < 2 * n_; ++e) {
    int p = partner_[e];
    if (p < 0 || p >= 2 * n_ || partner_[p] != e)
      throw IndexOutOfRange("partner array is not an involution");
  }
}

Diagram Diagram::identity(int n) {
  std::vector<int> p(2 * n);
  for (int i = 0; i < n; ++i) {
    p[i] = n + i;
    p[n + i] = i;
  }
  return Diagram(n, std::move(p));
}

int Diagram::rank() const {
  int r = 0;
  for (int i = 0; i < n_; ++i)
    if (partner_[i] >= n_) ++r;
  return r;
}

bool Diagram::has_horizontal_arc() const {
  for (int i = 0; i < n_; ++i)
    if (partner_[i] != i && partner_[i] < n_) return true;
  for (int i = n_; i < 2 * n_; ++i)
    if (partner_[i] != i && partner_[i] >= n_) return true;
  return false;
}

bool Diagram::has_noncrossing_verticals() const {
  int last_bot = -1;
  for (int i = 0; i < n_; ++i) {
    if (partner_[i] < n_) continue;
    if (partner_[i] <= last_bot) return false;
    last_bot = partner_[i];
  }
  return true;
}

Diagram Diagram::star() const {
  std::vector<int> p(2 * n_);
  auto flip = [this](int e) { return e < n_ ? e + n_ : e - n_; };
  for (int e = 0; e < 2 * n_; ++e) p[flip(e)] = flip(partner_[e]);
  return Diagram(n_, std::move(p));
}

Diagram Diagram::embed() const {
  int m = n_ + 1;
  std::vector<int> p(2 * m);
  auto lift = [this, m](int e) { return e < n_ ? e : e + 1; };
  for (int e = 0; e < 2 * n_; ++e) p[lift(e)] = lift(partner_[e]);
  p[n_] = m + n_;      // new top vertex n+1
  p[m + n_] = n_;      // new bottom vertex (n+1)'
  return Diagram(m, std::move(p));
}

std::string Diagram::str() const {
  std::ostringstream os;
  os << n_ << ";";
  for (int e = 0; e < 2 * n_; ++e) os << " " << partner_[e];
  return os.str();
}

Diagram Diagram::parse(const std::string& s) {
  auto semi = s.find(';');
  if (semi == std::string::npos) throw ParseError("diagram text needs 'n; p0 ...'");
  std::istringstream head(s.substr(0, semi));
  int n = -1;
  head >> n;
  if (head.fail() || n < 0) throw ParseError("bad strand count in diagram text");
  std::istringstream body(s.substr(semi + 1));
  std::vector<int> p;
  int v;
  while (body >> v) p.push_back(v);
  if (p.size() != static_cast<std::size_t>(2 * n))
    throw ParseError("diagram text needs exactly 2n partner entries");
  try {
    return Diagram(n, std::move(p));
  } catch (const IndexOutOfRange& e) {
    throw ParseError(std::string("invalid diagram: ") + e.what());
  }
}

namespace {

// Vertex ids in the stacked graph G(a, b):
//   [0, n)    top(a)      -- final top row
//   [n, 2n)   bot(a)      -- middle
//   [2n, 3n)  top(b)      -- middle (glued to bot(a) position-wise)
//   [3n, 4n)  bot(b)      -- final bottom row
struct Stacked {
  int n;
  const Diagram& a;
  const Diagram& b;

  // Diagram edge at v, or -1 for loop vertices.
  int diagram_edge(int v) const {
    if (v < 2 * n) {
      int p = a.partner_of(v);
      return p == v ? -1 : p;
    }
    int w = v - 2 * n;
    int p = b.partner_of(w);
    return p == w ? -1 : p + 2 * n;
  }

  // Glue edge between bot(a) i and top(b) i; -1 on the outer rows.
  int glue_edge(int v) const {
    if (v >= n && v < 2 * n) return v + n;
    if (v >= 2 * n && v < 3 * n) return v - n;
    return -1;
  }

  bool is_final(int v) const { return v < n || v >= 3 * n; }
};

}  // namespace

ComposeResult compose(const Diagram& a, const Diagram& b) {
  if (a.n() != b.n())
    throw StrandMismatch("compose: " + std::to_string(a.n()) + " vs " + std::to_string(b.n()));
  const int n = a.n();
  Stacked g{n, a, b};

  ComposeResult res;
  std::vector<int> comp_partner(2 * n);
  std::vector<bool> visited(4 * n, false);

  auto final_index = [n](int v) { return v < n ? v : v - 2 * n; };

  for (int v0 = 0; v0 < 4 * n; ++v0) {
    if (visited[v0]) continue;

    // Collect the component of v0. Every vertex has at most two
    // incident edges (diagram edge + glue edge), so components are
    // simple paths or cycles.
    std::vector<int> comp;
    std::vector<int> stack{v0};
    visited[v0] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : {g.diagram_edge(v), g.glue_edge(v)}) {
        if (w >= 0 && !visited[w]) {
          visited[w] = true;
          stack.push_back(w);
        }
      }
    }

    std::vector<int> finals;
    for (int v : comp)
      if (g.is_final(v)) finals.push_back(v);

    if (finals.empty()) {
      // Inner component: a cycle (all degrees two) or a line whose two
      // degree-one endpoints are necessarily loop vertices.
      bool cycle = true;
      for (int v : comp) {
        if (g.diagram_edge(v) < 0 || g.glue_edge(v) < 0) {
          cycle = false;
          break;
        }
      }
      res.loops_total += 1;
      if (cycle)
        res.loops_cycles += 1;
      else
        res.loops_looplines += 1;
    } else if (finals.size() == 1) {
      int f = final_index(finals[0]);
      comp_partner[f] = f;
    } else {
      assert(finals.size() == 2);
      int f0 = final_index(finals[0]);
      int f1 = final_index(finals[1]);
      comp_partner[f0] = f1;
      comp_partner[f1] = f0;
    }
  }

  res.diagram = Diagram(n, std::move(comp_partner));
  return res;
}

Diagram generator_e(int i, int n) {
  if (i < 1 || i > n - 1) throw IndexOutOfRange("e_i needs 1 <= i <= n-1");
  std::vector<int> p(2 * n);
  for (int k = 0; k < n; ++k) {
    p[k] = n + k;
    p[n + k] = k;
  }
  p[i - 1] = i;
  p[i] = i - 1;
  p[n + i - 1] = n + i;
  p[n + i] = n + i - 1;
  return Diagram(n, std::move(p));
}

Diagram generator_u(int i, int n) {
  if (i < 1 || i > n) throw IndexOutOfRange("u_i needs 1 <= i <= n");
  std::vector<int> p(2 * n);
  for (int k = 0; k < n; ++k) {
    p[k] = n + k;
    p[n + k] = k;
  }
  p[i - 1] = i - 1;
  p[n + i - 1] = n + i - 1;
  return Diagram(n, std::move(p));
}

Diagram generator_g(int i, int n) {
  if (i < 1 || i > n - 1) throw IndexOutOfRange("g_i needs 1 <= i <= n-1");
  std::vector<int> p(2 * n);
  for (int k = 0; k < n; ++k) {
    p[k] = n + k;
    p[n + k] = k;
  }
  p[i - 1] = n + i;
  p[n + i] = i - 1;
  p[i] = n + i - 1;
  p[n + i - 1] = i;
  return Diagram(n, std::move(p));
}

Diagram u_nt(int n, int t) {
  if (t < 0 || t > n) throw InvalidT("u_{n,t} needs 0 <= t <= n");
  std::vector<int> p(2 * n);
  for (int k = 0; k < n; ++k) {
    if (k < n - t) {
      p[k] = n + k;
      p[n + k] = k;
    } else {
      p[k] = k;
      p[n + k] = n + k;
    }
  }
  return Diagram(n, std::move(p));
}

Diagram diagram_v(int i, int j, int n) {
  if (i < 1 || j < 1 || i >= j || j > n) throw IndexOutOfRange("v_{i,j} needs 1 <= i < j <= n");
  std::vector<int> p(2 * n);
  for (int k = 0; k < n; ++k) {
    p[k] = n + k;
    p[n + k] = k;
  }
  p[i - 1] = j - 1;
  p[j - 1] = i - 1;
  p[n + i - 1] = n + i - 1;
  p[n + j - 1] = n + j - 1;
  return Diagram(n, std::move(p));
}

Diagram diagram_h(int i, int j, int n) {
  if (i < 1 || j < 1 || i >= j || j > n) throw IndexOutOfRange("h_{i,j} needs 1 <= i < j <= n");
  std::vector<int> p(2 * n);
  for (int k = 0; k < n; ++k) {
    p[k] = n + k;
    p[n + k] = k;
  }
  p[i - 1] = j - 1;
  p[j - 1] = i - 1;
  p[n + i - 1] = n + j - 1;
  p[n + j - 1] = n + i - 1;
  return Diagram(n, std::move(p));
}

Diagram permutation_diagram(const Perm& s) {
  int n = s.size();
  std::vector<int> p(2 * n);
  for (int i = 0; i < n; ++i) {
    p[i] = n + s(i);
    p[n + s(i)] = i;
  }
  return Diagram(n, std::move(p));
}

namespace {

void enumerate_matchings(std::vector<int>& partner, std::size_t from,
                         const std::vector<int>& verts, std::vector<Diagram>& out, int n) {
  std::size_t v = from;
  while (v < verts.size() && partner[verts[v]] >= 0) ++v;
  if (v == verts.size()) {
    std::vector<int> full = partner;
    out.push_back(Diagram(n, std::move(full)));
    return;
  }
  int a = verts[v];
  partner[a] = a;  // loop
  enumerate_matchings(partner, v + 1, verts, out, n);
  partner[a] = -1;
  for (std::size_t w = v + 1; w < verts.size(); ++w) {
    int b = verts[w];
    if (partner[b] >= 0) continue;
    partner[a] = b;
    partner[b] = a;
    enumerate_matchings(partner, v + 1, verts, out, n);
    partner[a] = -1;
    partner[b] = -1;
  }
}

void enumerate_loopless(std::vector<int>& partner, int top, std::vector<bool>& bot_used,
                        std::vector<Diagram>& out, int n) {
  if (top == n) {
    std::vector<int> full = partner;
    for (int j = 0; j < n; ++j)
      if (full[n + j] < 0) full[n + j] = n + j;
    out.push_back(Diagram(n, std::move(full)));
    return;
  }
  partner[top] = top;  // loop
  enumerate_loopless(partner, top + 1, bot_used, out, n);
  for (int j = 0; j < n; ++j) {
    if (bot_used[j]) continue;
    bot_used[j] = true;
    partner[top] = n + j;
    partner[n + j] = top;
    enumerate_loopless(partner, top + 1, bot_used, out, n);
    partner[n + j] = -1;
    bot_used[j] = false;
  }
  partner[top] = -1;
}

}  // namespace

std::vector<Diagram> enumerate_family(Family f, int n) {
  std::vector<Diagram> out;
  if (f == Family::A) {
    std::vector<int> partner(2 * n, -1);
    std::vector<int> verts(2 * n);
    for (int i = 0; i < 2 * n; ++i) verts[i] = i;
    enumerate_matchings(partner, 0, verts, out, n);
  } else if (f == Family::L) {
    std::vector<int> partner(2 * n, -1);
    std::vector<bool> bot_used(n, false);
    enumerate_loopless(partner, 0, bot_used, out, n);
  } else {
    for (const Perm& s : Perm::all(n)) out.push_back(permutation_diagram(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Diagram> cell_basis_diagrams(Family f, int n, int t) {
  if (t < 0 || t > n) throw InvalidT("cell basis needs 0 <= t <= n");
  if (f == Family::S) throw InvalidT("cell basis is defined for families A and L");
  const int m = n - t;

  std::vector<Diagram> out;
  std::vector<int> top_choice(m);
  // All m-subsets of the top row carry the (noncrossing) verticals.
  std::vector<int> comb(m);
  for (int i = 0; i < m; ++i) comb[i] = i;
  while (true) {
    std::vector<int> partner(2 * n, -1);
    std::vector<bool> vert_top(n, false);
    for (int k = 0; k < m; ++k) {
      partner[comb[k]] = n + k;
      partner[n + k] = comb[k];
      vert_top[comb[k]] = true;
    }
    for (int j = m; j < n; ++j) partner[n + j] = n + j;  // bottom loops

    std::vector<int> spare;
    for (int i = 0; i < n; ++i)
      if (!vert_top[i]) spare.push_back(i);

    if (f == Family::L) {
      for (int i : spare) partner[i] = i;
      out.push_back(Diagram(n, partner));
    } else {
      enumerate_matchings(partner, 0, spare, out, n);
    }

    // next combination
    int k = m - 1;
    while (k >= 0 && comb[k] == n - m + k) --k;
    if (k < 0) break;
    ++comb[k];
    for (int j = k + 1; j < m; ++j) comb[j] = comb[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<Diagram, Perm> factor_noncrossing(const Diagram& c, int t) {
  const int n = c.n();
  if (t < 0 || t > n) throw InvalidT("factor_noncrossing needs 0 <= t <= n");
  const int m = n - t;
  if (c.rank() != m)
    throw RankMismatch("factor_noncrossing: rank " + std::to_string(c.rank()) +
                       ", expected " + std::to_string(m));
  for (int j = 0; j < n; ++j) {
    int e = n + j;
    bool ok = (j < m) ? (c.partner_of(e) < n) : (c.partner_of(e) == e);
    if (!ok) throw BadBottomRow("factor_noncrossing: bottom row is not bot(u_{n,t})");
  }

  std::vector<int> tops;  // vertical top endpoints, ascending
  for (int i = 0; i < n; ++i)
    if (c.partner_of(i) >= n) tops.push_back(i);

  std::vector<int> sigma(m);
  std::vector<int> partner = c.partner();
  for (int k = 0; k < m; ++k) {
    sigma[k] = c.partner_of(tops[k]) - n;
    partner[tops[k]] = n + k;
    partner[n + k] = tops[k];
  }
  return {Diagram(n, std::move(partner)), Perm(sigma)};
}

long partial_matching_count(int t) {
  // i(t) = i(t-1) + (t-1) i(t-2): a point is looped or paired.
  long a = 1, b = 1;  // i(0), i(1)
  if (t == 0) return 1;
  for (int k = 2; k <= t; ++k) {
    long c = b + (k - 1) * a;
    a = b;
    b = c;
  }
  return b;
}

}  // namespace loopbrauer
