#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "groupspec/bitset.hpp"
#include "groupspec/caps.hpp"
#include "groupspec/group.hpp"
#include "groupspec/topology.hpp"

namespace groupspec {

/// A group H together with an injective homomorphism phi: G -> H.
class GGroup {
 public:
  /// Throws InputError if phi does not run G -> H or is not injective.
  GGroup(FiniteGroup g, FiniteGroup h, Morphism phi);

  const FiniteGroup& base() const { return g_; }
  const FiniteGroup& ambient() const { return h_; }
  const Morphism& phi() const { return phi_; }
  /// phi(G) as a subgroup of H.
  const Subgroup& image() const { return image_; }

 private:
  FiniteGroup g_;
  FiniteGroup h_;
  Morphism phi_;
  Subgroup image_;
};

/// (G, H/P, projection ∘ phi). P must meet phi(G) trivially.
GGroup quotient_ggroup(const GGroup& x, const Quotient& q);

/// G(x): the subgroup generated by the phi(G)-conjugates of x.
Subgroup orbit_subgroup(const GGroup& x, Elem e);

/// G(e) ∩ phi(G) != 1
bool is_invertible(const GGroup& x, Elem e);

/// Least nontrivial y with [G(e), G(y)] = 1, or nullopt when e is not a zero
/// divisor. y may equal e. Throws InputError for the identity.
std::optional<Elem> zero_divisor_witness(const GGroup& x, Elem e);
bool is_zero_divisor(const GGroup& x, Elem e);

struct DomainCheck {
  bool isDomain = true;
  // Least zero divisor and its least witness, when not a domain.
  std::optional<Elem> zeroDivisor;
  std::optional<Elem> witness;
  std::size_t orbitsScanned = 0;
  std::size_t distinctOrbitSubgroups = 0;
};

/// Scans one representative per phi(G)-conjugation orbit of H \ {1}.
DomainCheck check_domain(const GGroup& x);
bool is_domain(const GGroup& x);

/// P normal, P ∩ phi(G) = 1 and H/P a G-domain. Throws InputError if P is
/// not normal.
bool is_prime(const GGroup& x, const Subgroup& p);

/// The quantified form: for all x, y in H with [G(x),G(y)] ⊆ P, x ∈ P or
/// y ∈ P. Evaluated inside H, without forming H/P.
bool commutator_prime_test(const GGroup& x, const Subgroup& p);

struct PrimeEquivalence {
  bool quotientTest = false;
  bool commutatorTest = false;
  bool agree() const { return quotientTest == commutatorTest; }
};

/// Requires P normal with P ∩ phi(G) = 1.
PrimeEquivalence prime_equivalence_check(const GGroup& x, const Subgroup& p);

struct PrimeIdeal {
  Subgroup subgroup;
  Quotient quotient;
};

/// Prime spectrum with its Zariski topology.
///
/// `vanishing[i]` is V(normals[i]) as a bitset over point indices.
/// `specialization` lists pairs (i, j) with points[i] ⊊ points[j], i.e.
/// points[j] lies in the closure of points[i].
struct Spectrum {
  FiniteGroup ambient;
  std::optional<GGroup> owner;
  std::vector<Subgroup> normals;
  std::vector<PrimeIdeal> points;
  std::vector<std::size_t> pointNormal;
  std::vector<Bitset> vanishing;
  std::vector<Bitset> closedSets;
  std::vector<std::pair<std::size_t, std::size_t>> specialization;
  std::unordered_map<Bitset, std::size_t, BitsetHash> normalIndex;

  std::size_t size() const { return points.size(); }
  std::optional<std::size_t> normal_index(const Subgroup& s) const;
  std::optional<std::size_t> point_index(const Subgroup& s) const;
  FiniteTopology topology() const;
};

Spectrum spectrum(const GGroup& x, const Caps& caps = {});

/// Proper normal P of g with: for all normal I, J, [I,J] ⊆ P implies I ⊆ P
/// or J ⊆ P. No structure map; `owner` is empty.
Spectrum absolute_spectrum(const FiniteGroup& g, const Caps& caps = {});

/// V(I) over the points of s. Throws InputError if I is not normal.
Bitset vanishing_set(const Spectrum& s, const Subgroup& i);

struct InducedMap {
  /// pointMap[j] = index in the source spectrum of f^-1(target point j).
  std::vector<std::size_t> pointMap;
  std::size_t closedSetsChecked = 0;
};

/// f: H -> H' with f ∘ phi = phi'. `source` is Spec(H), `target` Spec(H').
/// Maps P' to f^-1(P') and certifies that the preimage of every closed
/// V(I) of Spec(H) is V(normal closure of f(I)). Throws InputError when f is
/// not a G-morphism, InvariantViolation when a certificate fails.
InducedMap induced_map(const Spectrum& source, const Spectrum& target, const Morphism& f);

/// H -> H/P for the given point, with the target checked to be a G-domain.
Morphism l_point(const Spectrum& s, std::size_t point);

}  // namespace groupspec
