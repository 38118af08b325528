#include "groupspec/topology.hpp"

#include <algorithm>
#include <unordered_set>

#include "groupspec/error.hpp"

namespace groupspec {

namespace {

bool family_less(const Bitset& a, const Bitset& b) {
  const auto ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  return a < b;
}

}  // namespace

std::vector<Bitset> canonical_family(std::vector<Bitset> family) {
  std::sort(family.begin(), family.end(), family_less);
  family.erase(std::unique(family.begin(), family.end()), family.end());
  return family;
}

bool satisfies_closed_set_axioms(std::size_t pointCount, const std::vector<Bitset>& closed) {
  std::unordered_set<Bitset, BitsetHash> set(closed.begin(), closed.end());
  for (const auto& c : closed)
    if (c.size() != pointCount) return false;
  if (!set.count(Bitset(pointCount)) || !set.count(Bitset::full(pointCount))) return false;
  for (const auto& a : closed)
    for (const auto& b : closed)
      if (!set.count(a | b) || !set.count(a & b)) return false;
  return true;
}

FiniteTopology FiniteTopology::from_closed_sets(std::size_t pointCount, std::vector<Bitset> closed) {
  closed = canonical_family(std::move(closed));
  if (!satisfies_closed_set_axioms(pointCount, closed)) throw InputError("family violates the closed-set axioms");
  FiniteTopology t;
  t.pointCount = pointCount;
  t.closedSets = std::move(closed);
  t.minOpen.reserve(pointCount);
  for (std::size_t p = 0; p < pointCount; ++p) {
    Bitset m = Bitset::full(pointCount);
    for (const auto& c : t.closedSets)
      if (!c.test(p)) m -= c;
    t.minOpen.push_back(std::move(m));
  }
  return t;
}

FiniteTopology FiniteTopology::generated_by(std::size_t pointCount, const std::vector<Bitset>& family) {
  std::vector<Bitset> closed(family);
  closed.push_back(Bitset(pointCount));
  closed.push_back(Bitset::full(pointCount));
  std::unordered_set<Bitset, BitsetHash> seen(closed.begin(), closed.end());
  for (std::size_t i = 0; i < closed.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      for (Bitset c : {closed[i] | closed[j], closed[i] & closed[j]})
        if (seen.insert(c).second) closed.push_back(std::move(c));
    }
  return from_closed_sets(pointCount, std::move(closed));
}

std::vector<Bitset> FiniteTopology::open_sets() const {
  std::vector<Bitset> opens;
  opens.reserve(closedSets.size());
  for (const auto& c : closedSets) opens.push_back(c.complement());
  return canonical_family(std::move(opens));
}

bool FiniteTopology::is_open(const Bitset& u) const { return is_closed(u.complement()); }

bool FiniteTopology::is_closed(const Bitset& c) const {
  return std::find(closedSets.begin(), closedSets.end(), c) != closedSets.end();
}

Bitset min_open(const FiniteTopology& t, std::size_t point) {
  if (point >= t.pointCount) throw InputError("min_open: point out of range");
  return t.minOpen[point];
}

}  // namespace groupspec
