#include "loopbrauer/perm.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

#include "loopbrauer/errors.hpp"

namespace loopbrauer {

Perm::Perm(int m) : p_(m) { std::iota(p_.begin(), p_.end(), 0); }

Perm::Perm(std::vector<int> images) : p_(std::move(images)) {
  std::vector<bool> seen(p_.size(), false);
  for (int v : p_) {
    if (v < 0 || v >= size() || seen[v]) throw IndexOutOfRange("not a permutation");
    seen[v] = true;
  }
}

Perm Perm::then(const Perm& o) const {
  assert(size() == o.size());
  Perm r;
  r.p_.resize(p_.size());
  for (int i = 0; i < size(); ++i) r.p_[i] = o.p_[p_[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.p_.resize(p_.size());
  for (int i = 0; i < size(); ++i) r.p_[p_[i]] = i;
  return r;
}

bool Perm::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (p_[i] != i) return false;
  return true;
}

Perm Perm::extended(int m) const {
  if (m < size()) throw IndexOutOfRange("extended: target degree too small");
  Perm r(m);
  for (int i = 0; i < size(); ++i) r.p_[i] = p_[i];
  return r;
}

Perm Perm::transposition(int m, int i, int j) {
  if (i < 0 || j < 0 || i >= m || j >= m) throw IndexOutOfRange("transposition index");
  Perm r(m);
  std::swap(r.p_[i], r.p_[j]);
  return r;
}

Perm Perm::adjacent(int m, int i) { return transposition(m, i, i + 1); }

std::vector<Perm> Perm::all(int m) {
  std::vector<int> v(m);
  std::iota(v.begin(), v.end(), 0);
  std::vector<Perm> out;
  do {
    out.push_back(Perm(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<int> Perm::adjacent_word() const {
  // Bubble sort; swapping positions j, j+1 of the one-line array is
  // precomposition by s_j, so the swaps applied in order give the word.
  std::vector<int> w = p_;
  std::vector<int> word;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int j = 0; j + 1 < size(); ++j) {
      if (w[j] > w[j + 1]) {
        std::swap(w[j], w[j + 1]);
        word.push_back(j);
        moved = true;
      }
    }
  }
  return word;
}

std::string Perm::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < size(); ++i) {
    if (i) os << " ";
    os << p_[i] + 1;
  }
  os << "]";
  return os.str();
}

}  // namespace loopbrauer
