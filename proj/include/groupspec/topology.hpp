#pragma once

#include <cstddef>
#include <vector>

#include "groupspec/bitset.hpp"

namespace groupspec {

/// Finite topological space given by its closed sets.
///
/// On a finite space every point P has a least open neighbourhood (the
/// intersection of all opens containing P); it is stored in `minOpen`.
struct FiniteTopology {
  std::size_t pointCount = 0;
  std::vector<Bitset> closedSets;  // canonical order: by size, then members
  std::vector<Bitset> minOpen;

  /// Throws InputError unless `closed` satisfies the closed-set axioms.
  static FiniteTopology from_closed_sets(std::size_t pointCount, std::vector<Bitset> closed);
  /// Smallest topology in which every member of `family` is closed.
  static FiniteTopology generated_by(std::size_t pointCount, const std::vector<Bitset>& family);

  std::vector<Bitset> open_sets() const;
  bool is_open(const Bitset& u) const;
  bool is_closed(const Bitset& c) const;
  Bitset empty_set() const { return Bitset(pointCount); }
  Bitset full_set() const { return Bitset::full(pointCount); }
};

/// Dedup and sort by (size, members).
std::vector<Bitset> canonical_family(std::vector<Bitset> family);

/// Contains the empty and full sets, closed under pairwise union and
/// intersection (which on a finite family gives arbitrary intersections).
bool satisfies_closed_set_axioms(std::size_t pointCount, const std::vector<Bitset>& closed);

Bitset min_open(const FiniteTopology& t, std::size_t point);

}  // namespace groupspec
