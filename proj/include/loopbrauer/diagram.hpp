#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "loopbrauer/perm.hpp"

namespace loopbrauer {

enum class Family { A, L, S };

char family_char(Family f);
Family family_from_char(char c);

/// Partial 1-factor on 2n labeled vertices: the basis diagrams of the
/// loop-augmented Brauer algebra. Top-row vertices 1..n are indices
/// 0..n-1, bottom-row vertices 1'..n' are indices n..2n-1. The partner
/// array is an involution; fixed points are the looped (isolated)
/// vertices. Diagrams are immutable once constructed.
class Diagram {
 public:
  Diagram() : n_(0) {}
  Diagram(int n, std::vector<int> partner);

  static Diagram identity(int n);

  int n() const { return n_; }
  const std::vector<int>& partner() const { return partner_; }
  int partner_of(int e) const { return partner_[e]; }
  bool is_loop(int e) const { return partner_[e] == e; }
  bool is_top(int e) const { return e < n_; }

  /// Number of vertical arcs (the propagating number).
  int rank() const;
  bool has_horizontal_arc() const;
  bool is_permutation() const { return rank() == n_; }
  /// True when every top vertex incident to a vertical arc maps
  /// order-preservingly onto the bottom vertical endpoints.
  bool has_noncrossing_verticals() const;

  /// Rows transposed.
  Diagram star() const;
  /// Adds strand n+1 with a straight vertical arc.
  Diagram embed() const;

  /// Text format "n; p0 p1 ... p(2n-1)" (self-index = loop).
  std::string str() const;
  static Diagram parse(const std::string& s);

  friend bool operator==(const Diagram& a, const Diagram& b) = default;
  friend auto operator<=>(const Diagram& a, const Diagram& b) = default;

 private:
  int n_;
  std::vector<int> partner_;
};

/// Result of stacking a above b: the induced diagram on top(a) u bot(b)
/// plus the count of inner components, split into cycles and
/// loop-ended lines.
struct ComposeResult {
  Diagram diagram;
  int loops_total = 0;
  int loops_cycles = 0;
  int loops_looplines = 0;
};

ComposeResult compose(const Diagram& a, const Diagram& b);

/// Generators (1-indexed, matching the usual presentation):
/// e_i has horizontal arcs (i, i+1) and (i', (i+1)'),
/// u_i has loops at i and i', g_i crosses strands i and i+1.
Diagram generator_e(int i, int n);
Diagram generator_u(int i, int n);
Diagram generator_g(int i, int n);
/// Straight verticals except loops at the last t positions of both rows.
Diagram u_nt(int n, int t);
/// Horizontal arc (i, j) on top, loops at i', j' below.
Diagram diagram_v(int i, int j, int n);
/// Horizontal arcs (i, j) on top and (i', j') below.
Diagram diagram_h(int i, int j, int n);
/// Top vertex i joined to bottom vertex s(i)'. Product homomorphism for
/// Perm::then.
Diagram permutation_diagram(const Perm& s);

/// All diagrams of the family, each exactly once, sorted
/// lexicographically on the partner array.
std::vector<Diagram> enumerate_family(Family f, int n);

/// All rank-(n-t) diagrams with bottom row bot(u_{n,t}) and noncrossing
/// verticals; the diagram part of the cell-module basis. Family L keeps
/// the t spare top vertices looped, family A allows loops or pairwise
/// horizontal arcs on them.
std::vector<Diagram> cell_basis_diagrams(Family f, int n, int t);

/// Factors a rank-(n-t) diagram c with bottom row bot(u_{n,t}) as
/// c = b . permutation_diagram(sigma) with b noncrossing (no inner
/// components arise in the product). sigma(k) = j when the k-th
/// smallest vertical top endpoint of c attaches to bottom j.
std::pair<Diagram, Perm> factor_noncrossing(const Diagram& c, int t);

/// Number of partial matchings on t points (loops or pairwise arcs).
long partial_matching_count(int t);

}  // namespace loopbrauer
