#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "loopbrauer/diagram.hpp"
#include "loopbrauer/errors.hpp"
#include "loopbrauer/laurent.hpp"

namespace loopbrauer {

/// Finite formal linear combination of same-strand diagrams. The
/// coefficient ring C is LaurentPoly (one-parameter algebra) or
/// BiLaurent (two-parameter). Zero coefficients are never stored.
template <class C>
class Element {
 public:
  explicit Element(int n) : n_(n) {}
  Element(const Diagram& d, const C& c = C(1)) : n_(d.n()) { add_term(d, c); }

  int n() const { return n_; }
  const std::map<Diagram, C>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t term_count() const { return coeffs_.size(); }

  Element& add_term(const Diagram& d, const C& c) {
    if (d.n() != n_) throw StrandMismatch("element term with wrong strand count");
    if (c == C(0)) return *this;
    auto it = coeffs_.find(d);
    if (it == coeffs_.end()) {
      coeffs_[d] = c;
    } else {
      it->second += c;
      if (it->second == C(0)) coeffs_.erase(it);
    }
    return *this;
  }

  Element& operator+=(const Element& o) {
    if (o.n_ != n_) throw StrandMismatch("element sum with mixed strand counts");
    for (const auto& [d, c] : o.coeffs_) add_term(d, c);
    return *this;
  }
  Element& operator-=(const Element& o) {
    if (o.n_ != n_) throw StrandMismatch("element sum with mixed strand counts");
    for (const auto& [d, c] : o.coeffs_) add_term(d, C(0) - c);
    return *this;
  }
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const C& s, Element a) {
    Element r(a.n_);
    for (const auto& [d, c] : a.coeffs_) r.add_term(d, s * c);
    return r;
  }

  friend bool operator==(const Element& a, const Element& b) = default;

  Element star() const {
    Element r(n_);
    for (const auto& [d, c] : coeffs_) r.add_term(d.star(), c);
    return r;
  }

 private:
  int n_;
  std::map<Diagram, C> coeffs_;
};

using AlgebraElement = Element<LaurentPoly>;
using AlgebraElement2 = Element<BiLaurent>;

/// a . b = x^l G'(a, b), extended bilinearly.
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

/// a o b = x1^l1 x2^l2 G'(a, b): cycles weigh x1, loop-ended lines x2.
AlgebraElement2 multiply_two_param(const AlgebraElement2& a, const AlgebraElement2& b);

/// Product in the quotient I_n^m: inputs must consist of rank-m
/// diagrams, any result diagram of rank < m is dropped.
AlgebraElement multiply_in_quotient(const AlgebraElement& a, const AlgebraElement& b, int m);

AlgebraElement2 to_two_param(const AlgebraElement& a);
AlgebraElement specialize_equal(const AlgebraElement2& a);

std::string element_str(const AlgebraElement& a);
std::string element_str(const AlgebraElement2& a);

/// Pretty generator names (e1, u2, g1, id, ...) for known diagrams.
std::string diagram_name(const Diagram& d);

// ---------------------------------------------------------------------
// Relation suite (Lemma 3.1 generator identities plus the classical
// Brauer relations), checked by exact symbolic multiplication.

struct RelationCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct RelationReport {
  int n = 0;
  std::vector<RelationCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

RelationReport check_relations(int n);

// The four special diagrams of the generator decomposition, built
// directly from their pictures.
Diagram lemma_d1(int n);
Diagram lemma_d2(int n);
Diagram lemma_d3(int n);
Diagram lemma_d4(int n);

// ---------------------------------------------------------------------
// Monomial span closure: which basis diagrams are reachable from a
// generating set under products (scalars ignored; x is invertible).

struct SpanReport {
  int n = 0;
  std::set<Diagram> reachable;
};

SpanReport generated_subalgebra(const std::vector<Diagram>& gens, int n);

// ---------------------------------------------------------------------
// Persisted multiplication tables over the canonical enumeration.

enum class TableMode { OneParam, TwoParam };

std::string table_mode_str(TableMode m);

struct TableEntry {
  int result = 0;  // index into the canonical enumeration
  int l1 = 0;      // one-param: total l lives here
  int l2 = 0;
};

class MultTable {
 public:
  static MultTable build(Family f, int n, TableMode mode, int jobs = 1);
  /// Loads from cache_dir if present, otherwise builds and saves.
  static MultTable cached(Family f, int n, TableMode mode,
                          const std::filesystem::path& cache_dir, int jobs = 1);

  Family family() const { return family_; }
  int n() const { return n_; }
  TableMode mode() const { return mode_; }
  std::size_t basis_size() const { return size_; }
  std::size_t entry_count() const { return entries_.size(); }
  const TableEntry& at(std::size_t i, std::size_t j) const { return entries_[i * size_ + j]; }

  void save(std::ostream& os) const;
  void save_file(const std::filesystem::path& p) const;
  static MultTable load(std::istream& is);
  static MultTable load_file(const std::filesystem::path& p);

  static std::string cache_filename(Family f, int n, TableMode mode);

 private:
  MultTable() = default;
  Family family_ = Family::A;
  int n_ = 0;
  TableMode mode_ = TableMode::OneParam;
  std::size_t size_ = 0;
  std::vector<TableEntry> entries_;
};

}  // namespace loopbrauer
