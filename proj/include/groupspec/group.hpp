#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "groupspec/bitset.hpp"
#include "groupspec/caps.hpp"

namespace groupspec {

/// Dense element id; 0 is always the identity.
using Elem = std::uint32_t;
inline constexpr Elem kIdentity = 0;

/// One-line notation: p[i] is the image of point i.
using Permutation = std::vector<std::uint32_t>;

/// Parses cycle notation such as "(0 1 2)(3 4)" or "()" into a permutation
/// of the given degree.
Permutation parse_cycles(const std::string& text, std::size_t degree);
std::string format_cycles(const Permutation& p);

/// Immutable finite group with a dense multiplication table.
///
/// Cheap to copy: all copies share one table. Two handles denote the same
/// group iff `same()` holds.
class FiniteGroup {
 public:
  FiniteGroup();

  /// Closure of the generators under composition. Element ids follow a
  /// breadth-first traversal from the identity, right-multiplying by the
  /// generators in input order. Product convention: (a*b)(i) = a(b(i)).
  static FiniteGroup from_permutations(std::size_t degree, std::span<const Permutation> generators,
                                       const Caps& caps = {}, std::string label = {});

  /// Cayley-table group. Row/column 0 must be the identity.
  static FiniteGroup from_table(const std::vector<std::vector<Elem>>& mul, const Caps& caps = {},
                                std::string label = {});

  /// Row-major table the caller guarantees to satisfy the group axioms with
  /// identity 0. Used for internally derived groups (quotients, products).
  static FiniteGroup from_trusted_table(std::size_t order, std::vector<std::uint16_t> table,
                                        std::vector<Elem> generators, std::string label);

  std::size_t order() const { return order_; }
  Elem mul(Elem a, Elem b) const { return impl_->table[static_cast<std::size_t>(a) * order_ + b]; }
  Elem inv(Elem a) const { return impl_->inverse[a]; }
  /// g x g^-1
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inv(g)); }
  /// a b a^-1 b^-1
  Elem commutator(Elem a, Elem b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }
  std::uint32_t element_order(Elem x) const;

  std::span<const Elem> generators() const { return impl_->generators; }
  const std::string& label() const { return impl_->label; }

  bool is_permutation() const { return impl_->permBacked; }
  std::size_t degree() const { return impl_->degree; }
  Permutation permutation(Elem x) const;
  std::optional<Elem> find(const Permutation& p) const;

  bool is_abelian() const;
  bool same(const FiniteGroup& o) const { return impl_ == o.impl_; }

 private:
  struct Impl {
    std::vector<std::uint16_t> table;
    std::vector<Elem> inverse;
    std::vector<Elem> generators;
    std::size_t degree = 0;
    bool permBacked = false;
    std::vector<std::uint32_t> points;  // order * degree images when permutation-backed
    std::string label;
  };
  explicit FiniteGroup(std::shared_ptr<const Impl> impl, std::size_t order);

  std::shared_ptr<const Impl> impl_;
  std::size_t order_ = 1;
};

/// Subgroup of a FiniteGroup, stored as a member bitset plus a small
/// generating set.
class Subgroup {
 public:
  Subgroup(FiniteGroup parent, Bitset members, std::vector<Elem> generators);

  const FiniteGroup& parent() const { return parent_; }
  const Bitset& members() const { return members_; }
  std::span<const Elem> generators() const { return generators_; }
  std::size_t order() const { return order_; }
  bool contains(Elem x) const { return members_.test(x); }
  bool is_subgroup_of(const Subgroup& o) const { return members_.is_subset_of(o.members_); }
  bool is_trivial() const { return order_ == 1; }
  std::vector<Elem> elements() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }
  /// Canonical order: by order, then by member list.
  friend bool operator<(const Subgroup& a, const Subgroup& b) {
    if (a.order_ != b.order_) return a.order_ < b.order_;
    return a.members_ < b.members_;
  }

 private:
  FiniteGroup parent_;
  Bitset members_;
  std::vector<Elem> generators_;
  std::size_t order_;
};

/// Group homomorphism given by its full image table.
class Morphism {
 public:
  Morphism(FiniteGroup source, FiniteGroup target, std::vector<Elem> images);

  const FiniteGroup& source() const { return source_; }
  const FiniteGroup& target() const { return target_; }
  Elem operator()(Elem x) const { return images_[x]; }
  std::span<const Elem> images() const { return images_; }

  Subgroup kernel() const;
  Subgroup image() const;
  bool is_injective() const;
  /// f^-1(K) for a subgroup K of the target.
  Subgroup preimage(const Subgroup& k) const;
  /// f(A) for a subgroup A of the source.
  Subgroup image_of(const Subgroup& a) const;

 private:
  FiniteGroup source_;
  FiniteGroup target_;
  std::vector<Elem> images_;
};

/// outer ∘ inner
Morphism compose(const Morphism& outer, const Morphism& inner);
Morphism identity_morphism(const FiniteGroup& g);

struct Quotient {
  FiniteGroup group;
  Morphism projection;
};

Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup whole_group(const FiniteGroup& g);

Subgroup subgroup_closure(const FiniteGroup& g, std::span<const Elem> seed);
/// Wraps a member set already known to be a subgroup; picks generators.
Subgroup subgroup_from_members(const FiniteGroup& g, const Bitset& members);
/// Smallest subgroup of h containing seed and stable under conjugation by
/// every member of k.
Subgroup normal_closure(const FiniteGroup& h, const Subgroup& k, std::span<const Elem> seed);
Subgroup normal_closure(const Subgroup& k, std::span<const Elem> seed);
/// <a b a^-1 b^-1 : a in A, b in B>
Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b);
Subgroup join(const Subgroup& a, const Subgroup& b);
Subgroup intersection(const Subgroup& a, const Subgroup& b);

/// Conjugacy classes ordered by least member; each class sorted.
std::vector<std::vector<Elem>> conjugacy_classes(const FiniteGroup& g);

bool is_normal(const Subgroup& n);
bool is_normalized_by(const Subgroup& n, const Subgroup& k);

/// Every normal subgroup, sorted canonically.
std::vector<Subgroup> normal_subgroups(const FiniteGroup& h, const Caps& caps = {});

Quotient quotient(const Subgroup& n);

/// Extends images of g's generators to a homomorphism g -> h.
/// Throws InputError if they do not extend.
Morphism make_morphism(const FiniteGroup& g, const FiniteGroup& h, std::span<const Elem> generatorImages);

Subgroup centralizer(const FiniteGroup& g, Elem x);
/// Elements commuting with every member of s.
Subgroup centralizer(const FiniteGroup& g, const Subgroup& s);
Subgroup center(const FiniteGroup& g);
Subgroup normalizer(const FiniteGroup& h, const Subgroup& k);

std::vector<Morphism> automorphism_group(const FiniteGroup& g, const Caps& caps = {});
bool is_complete(const FiniteGroup& g, const Caps& caps = {});

/// Permutation-backed groups: disjoint-union action. Otherwise a pair table.
FiniteGroup direct_product(std::span<const FiniteGroup> factors, const Caps& caps = {}, std::string label = {});

/// Exhaustive below the configured limit, sampled above it.
bool check_associativity(const FiniteGroup& g, const Caps& caps = {});

}  // namespace groupspec
