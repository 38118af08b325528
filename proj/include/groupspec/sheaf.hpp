#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "groupspec/bitset.hpp"
#include "groupspec/caps.hpp"
#include "groupspec/group.hpp"
#include "groupspec/spectrum.hpp"
#include "groupspec/topology.hpp"

namespace groupspec {

/// Points are normal subgroups of one ambient group, each with its quotient.
struct PointSpace {
  FiniteGroup ambient;
  std::vector<Subgroup> points;
  std::vector<Quotient> quotients;
  FiniteTopology topology;

  std::size_t size() const { return points.size(); }
};

PointSpace point_space(const Spectrum& s);

/// Arbitrary normal subgroups of h as points; closed sets are generated by
/// {P : I ⊆ P} for every normal I of h.
PointSpace containment_space(const FiniteGroup& h, std::vector<Subgroup> points, const Caps& caps = {});

/// Values and representatives are indexed by point; entries outside the
/// domain are 0.
struct LSection {
  Bitset domain;
  std::vector<Elem> values;           // element of H/P
  std::vector<Elem> representatives;  // element of H realizing the germ at P

  friend bool operator==(const LSection& a, const LSection& b) {
    return a.domain == b.domain && a.values == b.values;
  }
};

/// Representatives when `values` (indexed by point) is a section over the
/// open set u, nullopt otherwise. Throws InputError when u is not open.
std::optional<std::vector<Elem>> l_representatives(const PointSpace& x, const Bitset& u,
                                                   const std::vector<Elem>& values);
bool is_l_section(const PointSpace& x, const Bitset& u, const std::vector<Elem>& values);

/// The constant family P -> hP over u.
LSection l_section_of(const PointSpace& x, const Bitset& u, Elem h);

/// Every section over u, in lexicographic order of the value vector.
/// Throws CapExceeded when the product of the quotient orders over u exceeds
/// caps.maxSections.
std::vector<LSection> l_sections(const PointSpace& x, const Bitset& u, const Caps& caps = {});

LSection restrict(const PointSpace& x, const LSection& s, const Bitset& sub);

/// Unique section over the union of the domains restricting to each member.
/// Throws InputError when two members disagree on an overlap.
LSection glue(const PointSpace& x, const std::vector<LSection>& family);

/// Coefficients: integers (modulus 0) or integers mod m.
struct Coeff {
  std::int64_t modulus = 0;

  /// "z" or "zmod:<m>" with m >= 2.
  static Coeff parse(std::string_view text);
  std::string name() const;
  std::int64_t reduce(std::int64_t v) const;
  friend bool operator==(const Coeff&, const Coeff&) = default;
};

/// Element of R[H]: sparse map from element id to nonzero coefficient.
struct RingElement {
  Coeff coeff;
  std::map<Elem, std::int64_t> terms;

  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const RingElement&, const RingElement&) = default;
};

RingElement ring_basis(Coeff c, Elem h, std::int64_t k = 1);
RingElement ring_add(const RingElement& a, const RingElement& b);
RingElement ring_neg(const RingElement& a);
RingElement ring_sub(const RingElement& a, const RingElement& b);
/// 1_x 1_y = 1_{xy}, extended bilinearly.
RingElement ring_mul(const FiniteGroup& h, const RingElement& a, const RingElement& b);
/// Pushforward along a homomorphism, merging coefficients (p_Q when f is a
/// quotient projection).
RingElement ring_project(const Morphism& f, const RingElement& a);

struct ASection {
  Bitset domain;
  std::vector<RingElement> values;           // in R[H/P]
  std::vector<RingElement> representatives;  // in R[H]
};

/// Representatives when `values` is an A-section over u; `candidates`
/// (indexed by point, may be empty) are tried before solving the coset-sum
/// system exactly. Throws InputError when u is not open.
std::optional<std::vector<RingElement>> a_representatives(const PointSpace& x, Coeff c, const Bitset& u,
                                                          const std::vector<RingElement>& values,
                                                          const std::vector<RingElement>& candidates = {});
bool is_a_section(const PointSpace& x, Coeff c, const Bitset& u, const std::vector<RingElement>& values,
                  const std::vector<RingElement>& candidates = {});

/// The family Q -> p_Q(r) over u.
ASection a_section_of(const PointSpace& x, const Bitset& u, const RingElement& r);

/// Integer solution of a x = b (mod m when m > 0), or nullopt. Throws
/// CapExceeded on int64 overflow.
std::optional<std::vector<std::int64_t>> solve_integer(const std::vector<std::vector<std::int64_t>>& a,
                                                       const std::vector<std::int64_t>& b, std::int64_t m);

/// Pushforwards along a G-morphism f: H -> H', with pointMap from
/// induced_map (target point j -> source point pointMap[j]). The result lives
/// on the preimage of the domain.
LSection push_l(const PointSpace& source, const PointSpace& target, const std::vector<std::size_t>& pointMap,
                const Morphism& f, const LSection& s);
ASection push_a(const PointSpace& source, const PointSpace& target, const std::vector<std::size_t>& pointMap,
                const Morphism& f, const ASection& s);

}  // namespace groupspec
