#pragma once

// Brute-force reference computations for tests. Deliberately naive: plain
// std::set, all-pairs products, no generators, no caching. Nothing here
// calls the library's lattice code; only FiniteGroup::mul/inv are used.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "groupspec/group.hpp"

namespace oracle {

using groupspec::Elem;
using groupspec::FiniteGroup;
using ElemSet = std::set<Elem>;

inline ElemSet closure(const FiniteGroup& g, const ElemSet& seed) {
  ElemSet s = seed;
  s.insert(0);
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Elem> cur(s.begin(), s.end());
    for (Elem a : cur)
      for (Elem b : cur)
        if (s.insert(g.mul(a, b)).second) grew = true;
  }
  return s;
}

inline ElemSet normal_closure(const FiniteGroup& h, const ElemSet& by, const ElemSet& seed) {
  ElemSet s = closure(h, seed);
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Elem> cur(s.begin(), s.end());
    ElemSet add;
    for (Elem k : by)
      for (Elem x : cur) {
        const Elem y = h.mul(h.mul(k, x), h.inv(k));
        if (!s.count(y)) add.insert(y);
      }
    if (!add.empty()) {
      add.insert(s.begin(), s.end());
      s = closure(h, add);
      grew = true;
    }
  }
  return s;
}

inline ElemSet all_elements(const FiniteGroup& g) {
  ElemSet s;
  for (Elem x = 0; x < g.order(); ++x) s.insert(x);
  return s;
}

inline ElemSet commutator(const FiniteGroup& h, const ElemSet& a, const ElemSet& b) {
  ElemSet c;
  for (Elem x : a)
    for (Elem y : b) c.insert(h.mul(h.mul(x, y), h.mul(h.inv(x), h.inv(y))));
  return closure(h, c);
}

inline std::vector<ElemSet> conjugacy_classes(const FiniteGroup& g) {
  std::vector<ElemSet> out;
  ElemSet done;
  for (Elem x = 0; x < g.order(); ++x) {
    if (done.count(x)) continue;
    ElemSet cls;
    for (Elem k = 0; k < g.order(); ++k) cls.insert(g.mul(g.mul(k, x), g.inv(k)));
    done.insert(cls.begin(), cls.end());
    out.push_back(cls);
  }
  return out;
}

inline bool is_subgroup(const FiniteGroup& g, const ElemSet& s) {
  if (!s.count(0)) return false;
  for (Elem a : s)
    for (Elem b : s)
      if (!s.count(g.mul(a, b))) return false;
  return true;
}

/// Normal subgroups as the unions of conjugacy classes closed under
/// multiplication; exhaustive over class subsets.
inline std::set<ElemSet> normal_subgroups_by_class_subsets(const FiniteGroup& g) {
  const auto classes = oracle::conjugacy_classes(g);
  std::set<ElemSet> out;
  const std::size_t k = classes.size() - 1;  // class 0 is {identity}
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    ElemSet u{0};
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) u.insert(classes[i + 1].begin(), classes[i + 1].end());
    if (is_subgroup(g, u)) out.insert(u);
  }
  return out;
}

/// Every subgroup, as the closure of cyclic subgroups under joins.
inline std::set<ElemSet> all_subgroups(const FiniteGroup& g) {
  std::set<ElemSet> cyclic;
  for (Elem x = 0; x < g.order(); ++x) cyclic.insert(closure(g, {x}));
  std::set<ElemSet> all(cyclic);
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<ElemSet> cur(all.begin(), all.end());
    for (const auto& a : cur)
      for (const auto& c : cyclic) {
        ElemSet u = a;
        u.insert(c.begin(), c.end());
        if (all.insert(closure(g, u)).second) grew = true;
      }
  }
  return all;
}

inline bool is_normal(const FiniteGroup& g, const ElemSet& s) {
  for (Elem k = 0; k < g.order(); ++k)
    for (Elem x : s)
      if (!s.count(g.mul(g.mul(k, x), g.inv(k)))) return false;
  return true;
}

inline bool is_homomorphism(const FiniteGroup& g, const FiniteGroup& h, const std::vector<Elem>& img) {
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b)
      if (img[g.mul(a, b)] != h.mul(img[a], img[b])) return false;
  return true;
}

/// G(x) for structure image `phiImage`.
inline ElemSet orbit(const FiniteGroup& h, const ElemSet& phiImage, Elem x) {
  return normal_closure(h, phiImage, {x});
}

/// x is a zero divisor: some y != 1 with the commutator subgroup of G(x) and
/// G(y) trivial. Returns the least such y or 0.
inline Elem zero_divisor_witness(const FiniteGroup& h, const ElemSet& phiImage, Elem x) {
  const ElemSet gx = orbit(h, phiImage, x);
  for (Elem y = 1; y < h.order(); ++y)
    if (commutator(h, gx, orbit(h, phiImage, y)).size() == 1) return y;
  return 0;
}

inline bool is_domain(const FiniteGroup& h, const ElemSet& phiImage) {
  for (Elem x = 1; x < h.order(); ++x)
    if (zero_divisor_witness(h, phiImage, x) != 0) return false;
  return true;
}

/// Quantified prime condition over all pairs x, y.
inline bool prime_by_pairs(const FiniteGroup& h, const ElemSet& phiImage, const ElemSet& p) {
  std::vector<ElemSet> orbits(h.order());
  for (Elem x = 0; x < h.order(); ++x) orbits[x] = orbit(h, phiImage, x);
  for (Elem x = 0; x < h.order(); ++x) {
    if (p.count(x)) continue;
    for (Elem y = 0; y < h.order(); ++y) {
      if (p.count(y)) continue;
      const ElemSet c = commutator(h, orbits[x], orbits[y]);
      if (std::includes(p.begin(), p.end(), c.begin(), c.end())) return false;
    }
  }
  return true;
}

inline ElemSet to_set(const groupspec::Subgroup& s) {
  const auto e = s.elements();
  return ElemSet(e.begin(), e.end());
}

}  // namespace oracle
