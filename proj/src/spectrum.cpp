#include "groupspec/spectrum.hpp"

#include <algorithm>
#include <unordered_set>

#include "groupspec/error.hpp"

namespace groupspec {

namespace {

Subgroup checked_image(const Morphism& phi) {
  if (!phi.is_injective()) throw InputError("structure map is not injective");
  return phi.image();
}

// phi(G)-conjugation orbit of e.
std::vector<Elem> conjugation_orbit(const FiniteGroup& h, const Subgroup& by, Elem e, Bitset& assigned) {
  std::vector<Elem> orbit{e};
  assigned.set(e);
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (Elem c : by.generators()) {
      const Elem y = h.conj(c, orbit[i]);
      if (!assigned.test(y)) {
        assigned.set(y);
        orbit.push_back(y);
      }
    }
  return orbit;
}

// Least nontrivial element centralizing all of s, if any.
std::optional<Elem> least_nontrivial_centralizing(const FiniteGroup& h, const Subgroup& s) {
  const auto gens = s.generators();
  for (Elem y = 1; y < h.order(); ++y) {
    bool commutes = true;
    for (Elem a : gens)
      if (h.mul(a, y) != h.mul(y, a)) {
        commutes = false;
        break;
      }
    if (commutes) return y;
  }
  return std::nullopt;
}

void require_normal(const Subgroup& p, const FiniteGroup& h, const char* what) {
  if (!p.parent().same(h)) throw InputError(std::string(what) + ": subgroup of a different group");
  if (!is_normal(p)) throw InputError(std::string(what) + ": subgroup is not normal");
}

// Closed sets V(I) plus the empty set, in canonical order; specialization
// pairs from containment.
void finish_topology(Spectrum& s) {
  std::vector<Bitset> closed(s.vanishing);
  closed.push_back(Bitset(s.points.size()));
  s.closedSets = canonical_family(std::move(closed));
  for (std::size_t i = 0; i < s.points.size(); ++i)
    for (std::size_t j = 0; j < s.points.size(); ++j)
      if (i != j && s.points[i].subgroup.is_subgroup_of(s.points[j].subgroup)) s.specialization.emplace_back(i, j);
}

void index_normals(Spectrum& s) {
  for (std::size_t i = 0; i < s.normals.size(); ++i) s.normalIndex.emplace(s.normals[i].members(), i);
}

void compute_vanishing(Spectrum& s) {
  s.vanishing.clear();
  for (const auto& n : s.normals) {
    Bitset v(s.points.size());
    for (std::size_t p = 0; p < s.points.size(); ++p)
      if (n.is_subgroup_of(s.points[p].subgroup)) v.set(p);
    s.vanishing.push_back(std::move(v));
  }
}

}  // namespace

GGroup::GGroup(FiniteGroup g, FiniteGroup h, Morphism phi)
    : g_(std::move(g)), h_(std::move(h)), phi_(std::move(phi)), image_(checked_image(phi_)) {
  if (!phi_.source().same(g_) || !phi_.target().same(h_)) throw InputError("structure map must run G -> H");
}

GGroup quotient_ggroup(const GGroup& x, const Quotient& q) {
  return GGroup(x.base(), q.group, compose(q.projection, x.phi()));
}

Subgroup orbit_subgroup(const GGroup& x, Elem e) {
  if (e >= x.ambient().order()) throw InputError("element id out of range");
  return normal_closure(x.ambient(), x.image(), std::span<const Elem>(&e, 1));
}

bool is_invertible(const GGroup& x, Elem e) {
  return (orbit_subgroup(x, e).members() & x.image().members()).count() > 1;
}

std::optional<Elem> zero_divisor_witness(const GGroup& x, Elem e) {
  if (e == kIdentity) throw InputError("zero divisor test: element is the identity");
  // [G(e), G(y)] = 1 iff y centralizes G(e): the centralizer of G(e) is
  // phi(G)-stable, so it then contains G(y) as well.
  return least_nontrivial_centralizing(x.ambient(), orbit_subgroup(x, e));
}

bool is_zero_divisor(const GGroup& x, Elem e) { return zero_divisor_witness(x, e).has_value(); }

DomainCheck check_domain(const GGroup& x) {
  const FiniteGroup& h = x.ambient();
  DomainCheck result;
  Bitset assigned(h.order());
  assigned.set(kIdentity);
  std::unordered_map<Bitset, std::optional<Elem>, BitsetHash> cache;
  for (Elem e = 1; e < h.order(); ++e) {
    if (assigned.test(e)) continue;
    conjugation_orbit(h, x.image(), e, assigned);
    ++result.orbitsScanned;
    const Subgroup ge = normal_closure(h, x.image(), std::span<const Elem>(&e, 1));
    auto it = cache.find(ge.members());
    if (it == cache.end()) it = cache.emplace(ge.members(), least_nontrivial_centralizing(h, ge)).first;
    if (it->second) {
      result.isDomain = false;
      result.zeroDivisor = e;
      result.witness = it->second;
      break;
    }
  }
  result.distinctOrbitSubgroups = cache.size();
  return result;
}

bool is_domain(const GGroup& x) { return check_domain(x).isDomain; }

bool is_prime(const GGroup& x, const Subgroup& p) {
  require_normal(p, x.ambient(), "is_prime");
  if ((p.members() & x.image().members()).count() != 1) return false;
  return is_domain(quotient_ggroup(x, quotient(p)));
}

bool commutator_prime_test(const GGroup& x, const Subgroup& p) {
  const FiniteGroup& h = x.ambient();
  Bitset assigned = p.members();
  for (Elem e = 1; e < h.order(); ++e) {
    if (assigned.test(e)) continue;
    // P is normal, so membership in P is constant on the orbit.
    conjugation_orbit(h, x.image(), e, assigned);
    const Subgroup ge = normal_closure(h, x.image(), std::span<const Elem>(&e, 1));
    // y with [G(e), G(y)] ⊆ P are those commuting with G(e) modulo P.
    for (Elem y = 1; y < h.order(); ++y) {
      if (p.contains(y)) continue;
      bool commutesModP = true;
      for (Elem a : ge.generators())
        if (!p.contains(h.commutator(a, y))) {
          commutesModP = false;
          break;
        }
      if (commutesModP) return false;
    }
  }
  return true;
}

PrimeEquivalence prime_equivalence_check(const GGroup& x, const Subgroup& p) {
  require_normal(p, x.ambient(), "prime_equivalence_check");
  if ((p.members() & x.image().members()).count() != 1)
    throw InputError("prime_equivalence_check: P meets phi(G) nontrivially");
  PrimeEquivalence r;
  r.quotientTest = is_domain(quotient_ggroup(x, quotient(p)));
  r.commutatorTest = commutator_prime_test(x, p);
  return r;
}

std::optional<std::size_t> Spectrum::normal_index(const Subgroup& s) const {
  auto it = normalIndex.find(s.members());
  if (it == normalIndex.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Spectrum::point_index(const Subgroup& s) const {
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i].subgroup == s) return i;
  return std::nullopt;
}

FiniteTopology Spectrum::topology() const { return FiniteTopology::from_closed_sets(points.size(), closedSets); }

Spectrum spectrum(const GGroup& x, const Caps& caps) {
  Spectrum s;
  s.ambient = x.ambient();
  s.owner = x;
  s.normals = normal_subgroups(x.ambient(), caps);
  index_normals(s);
  for (std::size_t i = 0; i < s.normals.size(); ++i) {
    const Subgroup& n = s.normals[i];
    if ((n.members() & x.image().members()).count() != 1) continue;
    Quotient q = quotient(n);
    if (!is_domain(quotient_ggroup(x, q))) continue;
    s.points.push_back(PrimeIdeal{n, std::move(q)});
    s.pointNormal.push_back(i);
  }
  compute_vanishing(s);
  finish_topology(s);
  return s;
}

Spectrum absolute_spectrum(const FiniteGroup& g, const Caps& caps) {
  Spectrum s;
  s.ambient = g;
  s.normals = normal_subgroups(g, caps);
  index_normals(s);
  const std::size_t n = s.normals.size();
  std::vector<std::size_t> comm(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const auto k = s.normal_index(commutator_subgroup(s.normals[i], s.normals[j]));
      if (!k) throw InvariantViolation("commutator of normal subgroups is not normal");
      comm[i * n + j] = comm[j * n + i] = *k;
    }
  for (std::size_t p = 0; p < n; ++p) {
    const Subgroup& cand = s.normals[p];
    if (cand.order() == g.order()) continue;
    bool prime = true;
    for (std::size_t i = 0; i < n && prime; ++i)
      for (std::size_t j = i; j < n && prime; ++j)
        if (s.normals[comm[i * n + j]].is_subgroup_of(cand) && !s.normals[i].is_subgroup_of(cand) &&
            !s.normals[j].is_subgroup_of(cand))
          prime = false;
    if (!prime) continue;
    s.points.push_back(PrimeIdeal{cand, quotient(cand)});
    s.pointNormal.push_back(p);
  }
  compute_vanishing(s);
  finish_topology(s);
  return s;
}

Bitset vanishing_set(const Spectrum& s, const Subgroup& i) {
  require_normal(i, s.ambient, "vanishing_set");
  if (auto k = s.normal_index(i)) return s.vanishing[*k];
  throw InvariantViolation("normal subgroup missing from the enumerated lattice");
}

InducedMap induced_map(const Spectrum& source, const Spectrum& target, const Morphism& f) {
  if (!source.owner || !target.owner) throw InputError("induced_map needs G-group spectra");
  const GGroup& x = *source.owner;
  const GGroup& y = *target.owner;
  if (!f.source().same(x.ambient()) || !f.target().same(y.ambient()))
    throw InputError("induced_map: morphism does not run between the two ambient groups");
  // Base groups are matched by element id; catalog builds are deterministic.
  if (x.base().order() != y.base().order())
    throw InputError("induced_map: G-groups over different base groups");
  for (Elem g = 0; g < x.base().order(); ++g)
    if (f(x.phi()(g)) != y.phi()(g)) throw InputError("induced_map: morphism is not a G-morphism");

  InducedMap result;
  for (const auto& pt : target.points) {
    const auto idx = source.point_index(f.preimage(pt.subgroup));
    if (!idx) throw InvariantViolation("preimage of a prime is not prime");
    result.pointMap.push_back(*idx);
  }
  const Subgroup whole = whole_group(y.ambient());
  for (std::size_t i = 0; i < source.normals.size(); ++i) {
    Bitset pulled(target.points.size());
    for (std::size_t j = 0; j < target.points.size(); ++j)
      if (source.vanishing[i].test(result.pointMap[j])) pulled.set(j);
    const auto img = f.image_of(source.normals[i]);
    const std::vector<Elem> seed(img.generators().begin(), img.generators().end());
    const auto k = target.normal_index(normal_closure(y.ambient(), whole, seed));
    if (!k || !(target.vanishing[*k] == pulled)) throw InvariantViolation("induced map is not continuous");
    ++result.closedSetsChecked;
  }
  return result;
}

Morphism l_point(const Spectrum& s, std::size_t point) {
  if (!s.owner) throw InputError("l_point needs a G-group spectrum");
  if (point >= s.points.size()) throw InputError("l_point: point out of range");
  const PrimeIdeal& p = s.points[point];
  if (!is_domain(quotient_ggroup(*s.owner, p.quotient))) throw InvariantViolation("quotient by a prime is not a domain");
  return p.quotient.projection;
}

}  // namespace groupspec
