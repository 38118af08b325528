#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "groupspec/bitset.hpp"
#include "groupspec/lie/algebra.hpp"
#include "groupspec/topology.hpp"

namespace groupspec::lie {

/// A Lie algebra G with an injective morphism phi: S -> G.
template <class S>
class SLie {
 public:
  /// Throws InputError unless phi is an injective bracket-preserving map.
  SLie(LieAlgebra<S> base, LieAlgebra<S> ambient, Matrix<S> phi)
      : s_(std::move(base)), g_(std::move(ambient)), phi_(std::move(phi)) {
    if (phi_.rows() != g_.dim() || phi_.cols() != s_.dim()) throw InputError("structure map has the wrong shape");
    if (rank<S>(phi_) != s_.dim()) throw InputError("structure map is not injective");
    if (!is_morphism(s_, g_, phi_)) throw InputError("structure map does not preserve brackets");
    image_ = Subspace<S>::span_columns(phi_);
    for (Index i = 0; i < s_.dim(); ++i) phiAds_.push_back(g_.ad(phi_.col(i)));
  }

  const LieAlgebra<S>& base() const { return s_; }
  const LieAlgebra<S>& ambient() const { return g_; }
  const Matrix<S>& phi() const { return phi_; }
  const Subspace<S>& image() const { return image_; }
  /// ad(phi(s_i)) for the basis of S.
  const std::vector<Matrix<S>>& image_ads() const { return phiAds_; }

 private:
  LieAlgebra<S> s_;
  LieAlgebra<S> g_;
  Matrix<S> phi_;
  Subspace<S> image_;
  std::vector<Matrix<S>> phiAds_;
};

/// S(x): least ad(phi(S))-stable subspace containing x.
template <class S>
Subspace<S> orbit_subspace(const SLie<S>& x, const Vector<S>& v) {
  if (v.size() != x.ambient().dim()) throw InputError("vector has the wrong length");
  return ad_closure(x.image_ads(), Subspace<S>::of(v));
}

namespace detail {

// First nonzero vector of c outside phi(S) in projective enumeration order of
// coefficients over c's basis, if any.
template <class S>
std::optional<Vector<S>> outside_image(const SLie<S>& x, const Subspace<S>& c) {
  if (c.is_subspace_of(x.image())) return std::nullopt;
  std::optional<Vector<S>> found;
  for_each_projective_point<S>(c.dim(), [&](const Vector<S>& coeffs) {
    const Vector<S> y = c.basis().transpose() * coeffs;
    if (!x.image().contains(y)) {
      found = y;
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace detail

/// Some nonzero y outside phi(S) with [S(x), S(y)] = 0, or nullopt. Since
/// the centralizer of S(x) is ad(phi(S))-stable, y works iff it centralizes
/// S(x). Throws InputError when x = 0 or x lies in phi(S).
template <class S>
  requires FieldTraits<S>::finite
std::optional<Vector<S>> zero_divisor_witness(const SLie<S>& x, const Vector<S>& v) {
  if (is_zero(v)) throw InputError("zero divisor test: vector is zero");
  if (x.image().contains(v)) throw InputError("zero divisor test: vector lies in the image of S");
  return detail::outside_image(x, centralizer(x.ambient(), orbit_subspace(x, v)));
}

template <class S>
  requires FieldTraits<S>::finite
bool is_zero_divisor(const SLie<S>& x, const Vector<S>& v) {
  return zero_divisor_witness(x, v).has_value();
}

template <class S>
struct LieDomainCheck {
  bool isDomain = true;
  std::optional<Vector<S>> zeroDivisor;
  std::optional<Vector<S>> witness;
  std::size_t pointsScanned = 0;
  std::size_t distinctOrbits = 0;
};

/// Scans one representative per line outside phi(S), caching by S(x).
template <class S>
  requires FieldTraits<S>::finite
LieDomainCheck<S> check_domain(const SLie<S>& x, const Caps& caps = {}) {
  vector_count<S>(x.ambient().dim(), caps);
  LieDomainCheck<S> r;
  std::map<Subspace<S>, std::optional<Vector<S>>> cache;
  for_each_projective_point<S>(x.ambient().dim(), [&](const Vector<S>& v) {
    if (x.image().contains(v)) return true;
    ++r.pointsScanned;
    const Subspace<S> orbit = orbit_subspace(x, v);
    auto it = cache.find(orbit);
    if (it == cache.end())
      it = cache.emplace(orbit, detail::outside_image(x, centralizer(x.ambient(), orbit))).first;
    if (it->second) {
      r.isDomain = false;
      r.zeroDivisor = v;
      r.witness = it->second;
      return false;
    }
    return true;
  });
  r.distinctOrbits = cache.size();
  return r;
}

template <class S>
  requires FieldTraits<S>::finite
bool is_domain(const SLie<S>& x, const Caps& caps = {}) {
  return check_domain(x, caps).isDomain;
}

/// (S, G/P, projection ∘ phi); P must meet phi(S) in 0.
template <class S>
SLie<S> quotient_slie(const SLie<S>& x, const LieQuotient<S>& q) {
  return SLie<S>(x.base(), q.algebra, q.projection * x.phi());
}

/// P ideal, P ∩ phi(S) = 0 and G/P an S-domain. Throws InputError if P is
/// not an ideal.
template <class S>
  requires FieldTraits<S>::finite
bool is_prime(const SLie<S>& x, const Subspace<S>& p, const Caps& caps = {}) {
  if (!is_ideal(x.ambient(), p)) throw InputError("is_prime: subspace is not an ideal");
  if (!intersection(p, x.image()).is_zero()) return false;
  return is_domain(quotient_slie(x, quotient(x.ambient(), p)), caps);
}

template <class S>
struct LieSpectrum {
  std::vector<Subspace<S>> ideals;
  std::vector<std::size_t> points;  // indices into ideals
  std::vector<Bitset> vanishing;    // per ideal, over points
  std::vector<Bitset> basicClosed;  // the distinct V(I) and the empty set; closed sets are their unions
  std::vector<std::pair<std::size_t, std::size_t>> specialization;
  std::map<Subspace<S>, std::size_t> index;

  std::size_t size() const { return points.size(); }
  const Subspace<S>& point(std::size_t i) const { return ideals[points[i]]; }
  std::optional<std::size_t> ideal_index(const Subspace<S>& v) const {
    auto it = index.find(v);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }
  std::optional<std::size_t> point_index(const Subspace<S>& v) const {
    for (std::size_t i = 0; i < points.size(); ++i)
      if (ideals[points[i]] == v) return i;
    return std::nullopt;
  }
};

template <class S>
  requires FieldTraits<S>::finite
LieSpectrum<S> spec_lie(const SLie<S>& x, const Caps& caps = {}) {
  LieSpectrum<S> s;
  s.ideals = ideals(x.ambient(), caps);
  for (std::size_t i = 0; i < s.ideals.size(); ++i) {
    s.index.emplace(s.ideals[i], i);
    if (is_prime(x, s.ideals[i], caps)) s.points.push_back(i);
  }
  for (const auto& ideal : s.ideals) {
    Bitset v(s.points.size());
    for (std::size_t p = 0; p < s.points.size(); ++p)
      if (ideal.is_subspace_of(s.point(p))) v.set(p);
    s.vanishing.push_back(std::move(v));
  }
  std::vector<Bitset> closed(s.vanishing);
  closed.push_back(Bitset(s.points.size()));
  s.basicClosed = canonical_family(std::move(closed));
  for (std::size_t i = 0; i < s.points.size(); ++i)
    for (std::size_t j = 0; j < s.points.size(); ++j)
      if (i != j && s.point(i).is_subspace_of(s.point(j))) s.specialization.emplace_back(i, j);
  return s;
}

/// V(I) over the points of s. Throws InputError when I is not an enumerated
/// ideal.
template <class S>
Bitset v_lie(const LieSpectrum<S>& s, const Subspace<S>& i) {
  auto k = s.ideal_index(i);
  if (!k) throw InputError("v_lie: subspace is not an ideal");
  return s.vanishing[*k];
}

template <class S>
struct LieInducedMap {
  std::vector<std::size_t> pointMap;  // target point -> source point
  std::size_t closedSetsChecked = 0;
};

/// f: G -> G' with f ∘ phi = phi'. Maps P' to f^-1(P') and certifies that
/// the preimage of every V(I) is V(ideal generated by f(I)).
template <class S>
  requires FieldTraits<S>::finite
LieInducedMap<S> induced_map_lie(const SLie<S>& x, const LieSpectrum<S>& source, const SLie<S>& y,
                                 const LieSpectrum<S>& target, const Matrix<S>& f) {
  if (!is_morphism(x.ambient(), y.ambient(), f)) throw InputError("induced_map_lie: map does not preserve brackets");
  if (x.base().dim() != y.base().dim() || f * x.phi() != y.phi())
    throw InputError("induced_map_lie: map does not commute with the structure maps");
  LieInducedMap<S> r;
  for (std::size_t j = 0; j < target.size(); ++j) {
    const auto idx = source.point_index(preimage(f, target.point(j)));
    if (!idx) throw InvariantViolation("preimage of a prime ideal is not prime");
    r.pointMap.push_back(*idx);
  }
  for (std::size_t i = 0; i < source.ideals.size(); ++i) {
    Bitset pulled(target.size());
    for (std::size_t j = 0; j < target.size(); ++j)
      if (source.vanishing[i].test(r.pointMap[j])) pulled.set(j);
    const auto k = target.ideal_index(ideal_closure(y.ambient(), image(f, source.ideals[i])));
    if (!k || !(target.vanishing[*k] == pulled)) throw InvariantViolation("induced map is not continuous");
    ++r.closedSetsChecked;
  }
  return r;
}

template <class S>
struct LieSum {
  LieAlgebra<S> directSum;
  Subspace<S> relations;  // ideal generated by phi_G(s) - phi_H(s)
  LieQuotient<S> quotient;
  Matrix<S> inducedPhi;
  bool injective = false;
  std::optional<SLie<S>> object;  // present iff injective
};

/// (G ⊕ H) / <phi_G(s) - phi_H(s)>, structure map s -> class of phi_G(s).
/// A non-injective induced map is reported, not thrown.
template <class S>
LieSum<S> lie_sum(const SLie<S>& x, const SLie<S>& y) {
  if (x.base().dim() != y.base().dim()) throw InputError("lie_sum: different base algebras");
  const Index m = x.ambient().dim(), n = y.ambient().dim(), k = x.base().dim();
  LieAlgebra<S> ds = direct_sum(x.ambient(), y.ambient());
  Matrix<S> diff(k, m + n);
  for (Index i = 0; i < k; ++i) diff.row(i) << x.phi().col(i).transpose(), -y.phi().col(i).transpose();
  Subspace<S> rel = ideal_closure(ds, Subspace<S>::span(std::move(diff)));
  LieQuotient<S> q = quotient(ds, rel);
  Matrix<S> left = Matrix<S>::Zero(m + n, k);
  left.topRows(m) = x.phi();
  Matrix<S> induced = q.projection * left;
  const bool inj = rank<S>(induced) == k;
  std::optional<SLie<S>> obj;
  if (inj) obj.emplace(x.base(), q.algebra, induced);
  return LieSum<S>{std::move(ds), std::move(rel), std::move(q), std::move(induced), inj, std::move(obj)};
}

/// G ⊕ H with the diagonal structure map.
template <class S>
SLie<S> lie_product(const SLie<S>& x, const SLie<S>& y) {
  if (x.base().dim() != y.base().dim()) throw InputError("lie_product: different base algebras");
  const Index m = x.ambient().dim(), n = y.ambient().dim();
  Matrix<S> diag(m + n, x.base().dim());
  diag << x.phi(), y.phi();
  return SLie<S>(x.base(), direct_sum(x.ambient(), y.ambient()), std::move(diag));
}

}  // namespace groupspec::lie
