#include "loopbrauer/algebra.hpp"

#include <fstream>
#include <sstream>

#include "loopbrauer/workpool.hpp"

namespace loopbrauer {

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.n() != b.n()) throw StrandMismatch("multiply: strand counts differ");
  AlgebraElement r(a.n());
  for (const auto& [da, ca] : a.coeffs())
    for (const auto& [db, cb] : b.coeffs()) {
      ComposeResult cr = compose(da, db);
      r.add_term(cr.diagram, ca * cb * LaurentPoly::monomial(cr.loops_total));
    }
  return r;
}

AlgebraElement2 multiply_two_param(const AlgebraElement2& a, const AlgebraElement2& b) {
  if (a.n() != b.n()) throw StrandMismatch("multiply: strand counts differ");
  AlgebraElement2 r(a.n());
  for (const auto& [da, ca] : a.coeffs())
    for (const auto& [db, cb] : b.coeffs()) {
      ComposeResult cr = compose(da, db);
      r.add_term(cr.diagram, ca * cb * BiLaurent::monomial(cr.loops_cycles, cr.loops_looplines));
    }
  return r;
}

AlgebraElement multiply_in_quotient(const AlgebraElement& a, const AlgebraElement& b, int m) {
  if (a.n() != b.n()) throw StrandMismatch("multiply: strand counts differ");
  for (const auto& [d, c] : a.coeffs())
    if (d.rank() != m) throw RankMismatch("quotient product: left input has rank != m");
  for (const auto& [d, c] : b.coeffs())
    if (d.rank() != m) throw RankMismatch("quotient product: right input has rank != m");
  AlgebraElement r(a.n());
  for (const auto& [da, ca] : a.coeffs())
    for (const auto& [db, cb] : b.coeffs()) {
      ComposeResult cr = compose(da, db);
      if (cr.diagram.rank() < m) continue;
      r.add_term(cr.diagram, ca * cb * LaurentPoly::monomial(cr.loops_total));
    }
  return r;
}

AlgebraElement2 to_two_param(const AlgebraElement& a) {
  AlgebraElement2 r(a.n());
  for (const auto& [d, c] : a.coeffs())
    for (const auto& [e, q] : c.terms()) r.add_term(d, BiLaurent::monomial(e, 0, q));
  return r;
}

AlgebraElement specialize_equal(const AlgebraElement2& a) {
  AlgebraElement r(a.n());
  for (const auto& [d, c] : a.coeffs()) r.add_term(d, c.specialize_equal());
  return r;
}

std::string diagram_name(const Diagram& d) {
  const int n = d.n();
  if (d == Diagram::identity(n)) return "id";
  for (int i = 1; i <= n; ++i) {
    if (i <= n - 1 && d == generator_e(i, n)) return "e" + std::to_string(i);
    if (i <= n - 1 && d == generator_g(i, n)) return "g" + std::to_string(i);
    if (d == generator_u(i, n)) return "u" + std::to_string(i);
  }
  return "(" + d.str() + ")";
}

namespace {

template <class C>
std::string element_str_impl(const Element<C>& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : a.coeffs()) {
    if (!first) os << " + ";
    first = false;
    std::string cs = c.str();
    if (cs == "1") {
      os << diagram_name(d);
    } else {
      bool needs_parens = cs.find(' ') != std::string::npos;
      os << (needs_parens ? "(" + cs + ")" : cs) << " * " << diagram_name(d);
    }
  }
  return os.str();
}

}  // namespace

std::string element_str(const AlgebraElement& a) { return element_str_impl(a); }
std::string element_str(const AlgebraElement2& a) { return element_str_impl(a); }

// ---------------------------------------------------------------------
// Lemma 3.1 diagrams, read off the pictures.

Diagram lemma_d1(int n) {
  if (n < 3) throw IndexOutOfRange("d1 needs n >= 3");
  std::vector<int> p(2 * n);
  for (int k = 0; k < n - 3; ++k) {
    p[k] = n + k;
    p[n + k] = k;
  }
  // top: horizontal (n-2, n-1), loop at n
  p[n - 3] = n - 2;
  p[n - 2] = n - 3;
  p[n - 1] = n - 1;
  // bottom: loop at (n-2)', horizontal ((n-1)', n')
  p[n + n - 3] = n + n - 3;
  p[n + n - 2] = n + n - 1;
  p[n + n - 1] = n + n - 2;
  return Diagram(n, std::move(p));
}

Diagram lemma_d2(int n) {
  if (n < 2) throw IndexOutOfRange("d2 needs n >= 2");
  std::vector<int> p(2 * n);
  for (int k = 0; k < n - 2; ++k) {
    p[k] = n + k;
    p[n + k] = k;
  }
  // vertical (n-1, n'), loop at top n, loop at bottom (n-1)'
  p[n - 2] = n + n - 1;
  p[n + n - 1] = n - 2;
  p[n - 1] = n - 1;
  p[n + n - 2] = n + n - 2;
  return Diagram(n, std::move(p));
}

Diagram lemma_d3(int n) {
  if (n < 3) throw IndexOutOfRange("d3 needs n >= 3");
  std::vector<int> p(2 * n);
  for (int k = 0; k < n - 3; ++k) {
    p[k] = n + k;
    p[n + k] = k;
  }
  // vertical (n-2, n'), top loops n-1 and n, bottom horizontal ((n-2)', (n-1)')
  p[n - 3] = n + n - 1;
  p[n + n - 1] = n - 3;
  p[n - 2] = n - 2;
  p[n - 1] = n - 1;
  p[n + n - 3] = n + n - 2;
  p[n + n - 2] = n + n - 3;
  return Diagram(n, std::move(p));
}

Diagram lemma_d4(int n) {
  if (n < 2) throw IndexOutOfRange("d4 needs n >= 2");
  std::vector<int> p(2 * n);
  for (int k = 0; k < n - 2; ++k) {
    p[k] = n + k;
    p[n + k] = k;
  }
  // top loops n-1 and n, bottom horizontal ((n-1)', n')
  p[n - 2] = n - 2;
  p[n - 1] = n - 1;
  p[n + n - 2] = n + n - 1;
  p[n + n - 1] = n + n - 2;
  return Diagram(n, std::move(p));
}

RelationReport check_relations(int n) {
  RelationReport rep;
  rep.n = n;
  if (n < 2) return rep;

  auto E = [n](const Diagram& d) { return AlgebraElement(d); };
  auto prod = [](std::initializer_list<Diagram> ds) {
    AlgebraElement acc(ds.begin()->n());
    bool first = true;
    for (const Diagram& d : ds) {
      if (first) {
        acc = AlgebraElement(d);
        first = false;
      } else {
        acc = multiply(acc, AlgebraElement(d));
      }
    }
    return acc;
  };
  auto check = [&rep](const std::string& name, const AlgebraElement& lhs,
                      const AlgebraElement& rhs) {
    RelationCheck c;
    c.name = name;
    c.pass = (lhs == rhs);
    if (!c.pass) c.detail = element_str(lhs) + " != " + element_str(rhs);
    rep.checks.push_back(std::move(c));
  };

  Diagram un = generator_u(n, n), un1 = generator_u(n - 1, n);
  Diagram en1 = generator_e(n - 1, n), gn1 = generator_g(n - 1, n);

  check("u_n e_{n-1} = u_{n-1} e_{n-1}", prod({un, en1}), prod({un1, en1}));
  check("g_{n-1} u_{n-1} = u_n g_{n-1}", prod({gn1, un1}), prod({un, gn1}));
  check("u_{n-1} g_{n-1} = g_{n-1} u_n", prod({un1, gn1}), prod({gn1, un}));

  if (n >= 3) {
    Diagram en2 = generator_e(n - 2, n), un2 = generator_u(n - 2, n);
    // The stacking e_{n-2} u_{n-1} u_{n-2} e_{n-1} produces exactly one
    // inner component, so the product is x * d1.
    check("e_{n-2} u_{n-1} u_{n-2} e_{n-1} = x d1", prod({en2, un1, un2, en1}),
          LaurentPoly::monomial(1) * E(lemma_d1(n)));
    check("u_n e_{n-1} e_{n-2} = d3", prod({un, en1, en2}), E(lemma_d3(n)));
  }
  check("u_n g_{n-1} = d2", prod({un, gn1}), E(lemma_d2(n)));
  check("u_{n-1} e_{n-1} = d4", prod({un1, en1}), E(lemma_d4(n)));

  for (int i = 1; i <= n - 1; ++i) {
    check("e_" + std::to_string(i) + "^2 = x e_" + std::to_string(i),
          prod({generator_e(i, n), generator_e(i, n)}),
          LaurentPoly::monomial(1) * E(generator_e(i, n)));
    check("g_" + std::to_string(i) + "^2 = id",
          prod({generator_g(i, n), generator_g(i, n)}), E(Diagram::identity(n)));
  }
  for (int i = 1; i <= n - 2; ++i) {
    check("e_i e_{i+1} e_i = e_i (i=" + std::to_string(i) + ")",
          prod({generator_e(i, n), generator_e(i + 1, n), generator_e(i, n)}),
          E(generator_e(i, n)));
  }
  return rep;
}

SpanReport generated_subalgebra(const std::vector<Diagram>& gens, int n) {
  SpanReport rep;
  rep.n = n;
  std::vector<Diagram> work;
  for (const Diagram& g : gens) {
    if (g.n() != n) throw StrandMismatch("generator with wrong strand count");
    if (rep.reachable.insert(g).second) work.push_back(g);
  }
  while (!work.empty()) {
    Diagram d = work.back();
    work.pop_back();
    for (const Diagram& g : gens) {
      for (const Diagram& m : {compose(g, d).diagram, compose(d, g).diagram}) {
        if (rep.reachable.insert(m).second) work.push_back(m);
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------
// Multiplication tables.

std::string table_mode_str(TableMode m) {
  return m == TableMode::OneParam ? "one-param" : "two-param";
}

MultTable MultTable::build(Family f, int n, TableMode mode, int jobs) {
  MultTable t;
  t.family_ = f;
  t.n_ = n;
  t.mode_ = mode;
  std::vector<Diagram> basis = enumerate_family(f, n);
  t.size_ = basis.size();
  t.entries_.assign(t.size_ * t.size_, TableEntry{});

  std::map<Diagram, int> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);

  parallel_for(t.size_, jobs, [&](std::size_t i) {
    for (std::size_t j = 0; j < t.size_; ++j) {
      ComposeResult cr = compose(basis[i], basis[j]);
      TableEntry e;
      auto it = index.find(cr.diagram);
      // The product of two family diagrams stays in the family.
      if (it == index.end()) throw Error("table: product left the family");
      e.result = it->second;
      if (mode == TableMode::OneParam) {
        e.l1 = cr.loops_total;
        e.l2 = 0;
      } else {
        e.l1 = cr.loops_cycles;
        e.l2 = cr.loops_looplines;
      }
      t.entries_[i * t.size_ + j] = e;
    }
  });
  return t;
}

void MultTable::save(std::ostream& os) const {
  os << "LOOPBRAUER-TABLE v1 " << family_char(family_) << " " << n_ << " "
     << table_mode_str(mode_) << "\n";
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t j = 0; j < size_; ++j) {
      const TableEntry& e = entries_[i * size_ + j];
      os << i << " " << j << " -> " << e.result << " " << e.l1;
      if (mode_ == TableMode::TwoParam) os << " " << e.l2;
      os << "\n";
    }
}

void MultTable::save_file(const std::filesystem::path& p) const {
  std::ofstream os(p, std::ios::binary);  // LF endings on every platform
  if (!os) throw Error("cannot write table cache " + p.string());
  save(os);
}

MultTable MultTable::load(std::istream& is) {
  std::string header;
  if (!std::getline(is, header)) throw CorruptCache("empty table cache");
  std::istringstream hs(header);
  std::string magic, version, mode_word;
  char fam = 0;
  int n = -1;
  hs >> magic >> version >> fam >> n >> mode_word;
  if (hs.fail() || magic != "LOOPBRAUER-TABLE")
    throw CorruptCache("bad table header '" + header + "'");
  if (version != "v1") throw CacheVersionMismatch("table cache version " + version);

  MultTable t;
  t.family_ = family_from_char(fam);
  t.n_ = n;
  if (mode_word == "one-param")
    t.mode_ = TableMode::OneParam;
  else if (mode_word == "two-param")
    t.mode_ = TableMode::TwoParam;
  else
    throw CorruptCache("unknown table mode '" + mode_word + "'");

  t.size_ = enumerate_family(t.family_, t.n_).size();
  t.entries_.assign(t.size_ * t.size_, TableEntry{});
  std::string line;
  std::size_t count = 0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::size_t i = 0, j = 0;
    std::string arrow;
    TableEntry e;
    ls >> i >> j >> arrow >> e.result >> e.l1;
    if (t.mode_ == TableMode::TwoParam) ls >> e.l2;
    if (ls.fail() || arrow != "->" || i >= t.size_ || j >= t.size_ || e.result < 0 ||
        e.result >= static_cast<int>(t.size_))
      throw CorruptCache("bad table line '" + line + "'");
    t.entries_[i * t.size_ + j] = e;
    ++count;
  }
  if (count != t.size_ * t.size_) throw CorruptCache("table cache is incomplete");
  return t;
}

MultTable MultTable::load_file(const std::filesystem::path& p) {
  std::ifstream is(p, std::ios::binary);
  if (!is) throw CorruptCache("cannot open table cache " + p.string());
  return load(is);
}

std::string MultTable::cache_filename(Family f, int n, TableMode mode) {
  return std::string("table_") + family_char(f) + std::to_string(n) + "_" +
         table_mode_str(mode) + ".txt";
}

MultTable MultTable::cached(Family f, int n, TableMode mode,
                            const std::filesystem::path& cache_dir, int jobs) {
  std::filesystem::path file = cache_dir / cache_filename(f, n, mode);
  if (std::filesystem::exists(file)) {
    MultTable t = load_file(file);
    if (t.family() != f || t.n() != n || t.mode() != mode)
      throw CacheVersionMismatch("table cache " + file.string() + " has mismatched key");
    return t;
  }
  MultTable t = build(f, n, mode, jobs);
  std::filesystem::create_directories(cache_dir);
  t.save_file(file);
  return t;
}

}  // namespace loopbrauer
