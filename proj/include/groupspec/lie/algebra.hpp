#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "groupspec/caps.hpp"
#include "groupspec/error.hpp"
#include "groupspec/lie/field.hpp"

namespace groupspec::lie {

using Index = Eigen::Index;

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

template <class Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != S(0)) return false;
  return true;
}

template <class S>
Vector<S> unit(Index n, Index i) {
  Vector<S> v = Vector<S>::Zero(n);
  v(i) = S(1);
  return v;
}

/// Reduced row echelon form in place; returns the pivot columns. Zero rows
/// are dropped.
template <class S>
std::vector<Index> rref(Matrix<S>& m) {
  std::vector<Index> pivots;
  Index row = 0;
  for (Index c = 0; c < m.cols() && row < m.rows(); ++c) {
    Index r = row;
    while (r < m.rows() && m(r, c) == S(0)) ++r;
    if (r == m.rows()) continue;
    if (r != row) m.row(r).swap(m.row(row));
    const S inv = S(1) / m(row, c);
    m.row(row) *= inv;
    for (Index k = 0; k < m.rows(); ++k)
      if (k != row && m(k, c) != S(0)) {
        const S f = m(k, c);
        m.row(k) -= f * m.row(row);
      }
    pivots.push_back(c);
    ++row;
  }
  m.conservativeResize(row, m.cols());
  return pivots;
}

template <class S>
Index rank(Matrix<S> m) {
  return static_cast<Index>(rref(m).size());
}

/// Columns spanning {x : m x = 0}.
template <class S>
Matrix<S> nullspace(const Matrix<S>& m) {
  Matrix<S> r = m;
  const auto pivots = rref(r);
  const Index n = m.cols();
  std::vector<Index> free;
  for (Index c = 0, k = 0; c < n; ++c) {
    if (k < static_cast<Index>(pivots.size()) && pivots[k] == c)
      ++k;
    else
      free.push_back(c);
  }
  Matrix<S> basis = Matrix<S>::Zero(n, static_cast<Index>(free.size()));
  for (std::size_t f = 0; f < free.size(); ++f) {
    basis(free[f], static_cast<Index>(f)) = S(1);
    for (std::size_t k = 0; k < pivots.size(); ++k) basis(pivots[k], static_cast<Index>(f)) = -r(static_cast<Index>(k), free[f]);
  }
  return basis;
}

/// Subspace of S^n in canonical reduced row echelon form.
template <class S>
class Subspace {
 public:
  explicit Subspace(Index ambient = 0) : basis_(0, ambient) {}

  /// Span of the rows of `rows`.
  static Subspace span(Matrix<S> rows) {
    Subspace s;
    s.pivots_ = rref(rows);
    s.basis_ = std::move(rows);
    return s;
  }
  static Subspace span_columns(const Matrix<S>& cols) { return span(cols.transpose()); }
  static Subspace of(const Vector<S>& v) { return span(v.transpose()); }
  static Subspace whole(Index n) { return span(Matrix<S>::Identity(n, n)); }

  Index ambient_dim() const { return basis_.cols(); }
  Index dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  const Matrix<S>& basis() const { return basis_; }
  Vector<S> basis_vector(Index i) const { return basis_.row(i).transpose(); }
  const std::vector<Index>& pivots() const { return pivots_; }

  /// v minus its component along the pivots; zero iff v is in the subspace.
  Vector<S> reduce(Vector<S> v) const {
    for (Index i = 0; i < dim(); ++i) {
      const S c = v(pivots_[static_cast<std::size_t>(i)]);
      if (c != S(0)) v -= c * basis_.row(i).transpose();
    }
    return v;
  }
  bool contains(const Vector<S>& v) const { return lie::is_zero(reduce(v)); }
  bool is_subspace_of(const Subspace& o) const {
    for (Index i = 0; i < dim(); ++i)
      if (!o.contains(basis_vector(i))) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim() == b.ambient_dim() && a.dim() == b.dim() && a.basis_ == b.basis_;
  }
  /// By dimension, then lexicographically on the echelon entries.
  friend bool operator<(const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    for (Index i = 0; i < a.dim(); ++i)
      for (Index j = 0; j < a.ambient_dim(); ++j)
        if (a.basis_(i, j) != b.basis_(i, j)) return order_key(a.basis_(i, j)) < order_key(b.basis_(i, j));
    return false;
  }

 private:
  static auto order_key(const S& v) {
    if constexpr (FieldTraits<S>::finite)
      return FieldTraits<S>::to_integer(v);
    else
      return v;
  }
  Matrix<S> basis_;
  std::vector<Index> pivots_;
};

template <class S>
Subspace<S> sum(const Subspace<S>& a, const Subspace<S>& b) {
  Matrix<S> rows(a.dim() + b.dim(), a.ambient_dim());
  rows << a.basis(), b.basis();
  return Subspace<S>::span(std::move(rows));
}

/// Rows spanning {y : y·v = 0 for v in a}.
template <class S>
Matrix<S> annihilator(const Subspace<S>& a) {
  if (a.dim() == 0) return Matrix<S>::Identity(a.ambient_dim(), a.ambient_dim());
  return nullspace<S>(a.basis()).transpose();
}

template <class S>
Subspace<S> intersection(const Subspace<S>& a, const Subspace<S>& b) {
  const Matrix<S> aa = annihilator(a), bb = annihilator(b);
  Matrix<S> stacked(aa.rows() + bb.rows(), a.ambient_dim());
  stacked << aa, bb;
  return Subspace<S>::span_columns(nullspace<S>(stacked));
}

/// m(V) for a linear map given by its matrix.
template <class S>
Subspace<S> image(const Matrix<S>& m, const Subspace<S>& v) {
  return Subspace<S>::span_columns(m * v.basis().transpose());
}

/// m^-1(V)
template <class S>
Subspace<S> preimage(const Matrix<S>& m, const Subspace<S>& v) {
  if (v.dim() == v.ambient_dim()) return Subspace<S>::whole(m.cols());
  const Matrix<S> a = annihilator(v);
  return Subspace<S>::span_columns(nullspace<S>(a * m));
}

/// Finite-dimensional Lie algebra by structure constants: column j of
/// ad_basis(i) is [e_i, e_j].
template <class S>
class LieAlgebra {
 public:
  struct Bracket {
    Index i;
    Index j;
    Vector<S> value;
  };

  LieAlgebra() = default;

  /// Unlisted pairs bracket to zero; (j,i) defaults to minus (i,j). Throws
  /// InputError on an antisymmetry or Jacobi failure, naming the basis
  /// indices involved.
  static LieAlgebra from_brackets(Index dim, const std::vector<Bracket>& brackets, std::string label = {}) {
    std::vector<Matrix<S>> ad(static_cast<std::size_t>(dim), Matrix<S>::Zero(dim, dim));
    std::vector<std::vector<bool>> given(static_cast<std::size_t>(dim), std::vector<bool>(static_cast<std::size_t>(dim)));
    for (const auto& b : brackets) {
      if (b.i < 0 || b.j < 0 || b.i >= dim || b.j >= dim) throw InputError("bracket index out of range");
      if (b.value.size() != dim) throw InputError("bracket value has the wrong length");
      ad[static_cast<std::size_t>(b.i)].col(b.j) = b.value;
      given[static_cast<std::size_t>(b.i)][static_cast<std::size_t>(b.j)] = true;
    }
    for (const auto& b : brackets)
      if (b.i != b.j && !given[static_cast<std::size_t>(b.j)][static_cast<std::size_t>(b.i)])
        ad[static_cast<std::size_t>(b.j)].col(b.i) = -b.value;
    LieAlgebra l(std::move(ad), std::move(label));
    if (auto why = l.axiom_failure()) throw InputError(*why);
    return l;
  }

  static LieAlgebra abelian(Index dim, std::string label = {}) {
    return LieAlgebra(std::vector<Matrix<S>>(static_cast<std::size_t>(dim), Matrix<S>::Zero(dim, dim)), std::move(label));
  }

  /// For algebras derived from validated ones; a failure here is an
  /// internal error.
  static LieAlgebra derived(std::vector<Matrix<S>> ad, std::string label) {
    LieAlgebra l(std::move(ad), std::move(label));
    if (auto why = l.axiom_failure()) throw InvariantViolation("derived algebra: " + *why);
    return l;
  }

  Index dim() const { return static_cast<Index>(ad_.size()); }
  const std::string& label() const { return label_; }
  const Matrix<S>& ad_basis(Index i) const { return ad_[static_cast<std::size_t>(i)]; }
  Vector<S> basis_bracket(Index i, Index j) const { return ad_[static_cast<std::size_t>(i)].col(j); }

  Matrix<S> ad(const Vector<S>& x) const {
    Matrix<S> m = Matrix<S>::Zero(dim(), dim());
    for (Index i = 0; i < dim(); ++i)
      if (x(i) != S(0)) m += x(i) * ad_[static_cast<std::size_t>(i)];
    return m;
  }
  Vector<S> bracket(const Vector<S>& x, const Vector<S>& y) const { return ad(x) * y; }

  bool is_abelian() const {
    for (const auto& m : ad_)
      if (!is_zero(m)) return false;
    return true;
  }

  /// Description of the first antisymmetry or Jacobi failure on basis
  /// elements, if any.
  std::optional<std::string> axiom_failure() const {
    const Index n = dim();
    for (Index i = 0; i < n; ++i) {
      if (!is_zero(basis_bracket(i, i))) return "antisymmetry fails: [e" + std::to_string(i) + ",e" + std::to_string(i) + "] != 0";
      for (Index j = i + 1; j < n; ++j)
        if (basis_bracket(i, j) != -basis_bracket(j, i))
          return "antisymmetry fails: [e" + std::to_string(i) + ",e" + std::to_string(j) + "] != -[e" +
                 std::to_string(j) + ",e" + std::to_string(i) + "]";
    }
    for (Index i = 0; i < n; ++i)
      for (Index j = i + 1; j < n; ++j)
        for (Index k = j + 1; k < n; ++k) {
          const Vector<S> jac = ad_basis(i) * basis_bracket(j, k) + ad_basis(j) * basis_bracket(k, i) +
                                ad_basis(k) * basis_bracket(i, j);
          if (!is_zero(jac))
            return "Jacobi fails on (e" + std::to_string(i) + ",e" + std::to_string(j) + ",e" + std::to_string(k) + ")";
        }
    return std::nullopt;
  }

 private:
  LieAlgebra(std::vector<Matrix<S>> ad, std::string label) : ad_(std::move(ad)), label_(std::move(label)) {}
  std::vector<Matrix<S>> ad_;
  std::string label_;
};

/// m([x,y]) = [m x, m y] on basis pairs.
template <class S>
bool is_morphism(const LieAlgebra<S>& from, const LieAlgebra<S>& to, const Matrix<S>& m) {
  if (m.rows() != to.dim() || m.cols() != from.dim()) return false;
  for (Index i = 0; i < from.dim(); ++i)
    for (Index j = i + 1; j < from.dim(); ++j)
      if (m * from.basis_bracket(i, j) != to.bracket(m.col(i), m.col(j))) return false;
  return true;
}

/// Least subspace containing v and stable under every ad(a), a in `by`.
template <class S>
Subspace<S> ad_closure(const std::vector<Matrix<S>>& by, Subspace<S> v) {
  bool grew = true;
  while (grew) {
    grew = false;
    for (Index k = 0; k < v.dim() && !grew; ++k) {
      const Vector<S> b = v.basis_vector(k);
      for (const auto& a : by) {
        const Vector<S> w = a * b;
        if (!v.contains(w)) {
          v = sum(v, Subspace<S>::of(w));
          grew = true;
          break;
        }
      }
    }
  }
  return v;
}

template <class S>
std::vector<Matrix<S>> basis_ads(const LieAlgebra<S>& l) {
  std::vector<Matrix<S>> ads;
  for (Index i = 0; i < l.dim(); ++i) ads.push_back(l.ad_basis(i));
  return ads;
}

template <class S>
bool is_ideal(const LieAlgebra<S>& l, const Subspace<S>& v) {
  for (Index i = 0; i < l.dim(); ++i)
    for (Index k = 0; k < v.dim(); ++k)
      if (!v.contains(l.ad_basis(i) * v.basis_vector(k))) return false;
  return true;
}

template <class S>
Subspace<S> ideal_closure(const LieAlgebra<S>& l, const Subspace<S>& v) {
  return ad_closure(basis_ads(l), v);
}

/// [A, B]: span of brackets of basis vectors.
template <class S>
Subspace<S> bracket_subspace(const LieAlgebra<S>& l, const Subspace<S>& a, const Subspace<S>& b) {
  Matrix<S> rows(a.dim() * b.dim(), l.dim());
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < b.dim(); ++j) rows.row(i * b.dim() + j) = l.bracket(a.basis_vector(i), b.basis_vector(j)).transpose();
  return Subspace<S>::span(std::move(rows));
}

/// {y : [v, y] = 0 for v in V}
template <class S>
Subspace<S> centralizer(const LieAlgebra<S>& l, const Subspace<S>& v) {
  Matrix<S> stacked(v.dim() * l.dim(), l.dim());
  for (Index k = 0; k < v.dim(); ++k) stacked.middleRows(k * l.dim(), l.dim()) = l.ad(v.basis_vector(k));
  return Subspace<S>::span_columns(nullspace<S>(stacked));
}

template <class S>
struct LieQuotient {
  LieAlgebra<S> algebra;
  Matrix<S> projection;        // dim(L/P) x dim(L)
  std::vector<Index> complement;  // coordinates spanning the complement
};

/// L/P on the non-pivot coordinates of P. Throws InputError if P is not an
/// ideal.
template <class S>
LieQuotient<S> quotient(const LieAlgebra<S>& l, const Subspace<S>& p) {
  if (p.ambient_dim() != l.dim()) throw InputError("quotient: subspace of a different algebra");
  if (!is_ideal(l, p)) throw InputError("quotient: subspace is not an ideal");
  std::vector<Index> comp;
  for (Index c = 0, k = 0; c < l.dim(); ++c) {
    if (k < p.dim() && p.pivots()[static_cast<std::size_t>(k)] == c)
      ++k;
    else
      comp.push_back(c);
  }
  const Index q = static_cast<Index>(comp.size());
  Matrix<S> proj = Matrix<S>::Zero(q, l.dim());
  for (Index j = 0; j < l.dim(); ++j) {
    const Vector<S> r = p.reduce(unit<S>(l.dim(), j));
    for (Index a = 0; a < q; ++a) proj(a, j) = r(comp[static_cast<std::size_t>(a)]);
  }
  std::vector<Matrix<S>> ad(static_cast<std::size_t>(q), Matrix<S>::Zero(q, q));
  for (Index a = 0; a < q; ++a)
    for (Index b = 0; b < q; ++b)
      ad[static_cast<std::size_t>(a)].col(b) = proj * l.basis_bracket(comp[static_cast<std::size_t>(a)], comp[static_cast<std::size_t>(b)]);
  return {LieAlgebra<S>::derived(std::move(ad), l.label() + "/I" + std::to_string(p.dim())), std::move(proj),
          std::move(comp)};
}

template <class S>
LieAlgebra<S> direct_sum(const LieAlgebra<S>& a, const LieAlgebra<S>& b) {
  const Index n = a.dim() + b.dim();
  std::vector<Matrix<S>> ad(static_cast<std::size_t>(n), Matrix<S>::Zero(n, n));
  for (Index i = 0; i < a.dim(); ++i) ad[static_cast<std::size_t>(i)].topLeftCorner(a.dim(), a.dim()) = a.ad_basis(i);
  for (Index i = 0; i < b.dim(); ++i)
    ad[static_cast<std::size_t>(a.dim() + i)].bottomRightCorner(b.dim(), b.dim()) = b.ad_basis(i);
  return LieAlgebra<S>::derived(std::move(ad), a.label() + "+" + b.label());
}

/// Calls f(v) for one representative of every line through 0 in S^n: the
/// vectors whose first nonzero coordinate is 1, in lexicographic order of
/// (leading index descending, remaining coordinates).
template <class S, class F>
  requires FieldTraits<S>::finite
void for_each_projective_point(Index n, F&& f) {
  const auto elems = FieldTraits<S>::elements();
  const std::size_t q = elems.size();
  for (Index lead = 0; lead < n; ++lead) {
    const Index rest = n - lead - 1;
    std::vector<std::size_t> digits(static_cast<std::size_t>(rest), 0);
    while (true) {
      Vector<S> v = Vector<S>::Zero(n);
      v(lead) = S(1);
      for (Index k = 0; k < rest; ++k) v(lead + 1 + k) = elems[digits[static_cast<std::size_t>(k)]];
      if (!f(static_cast<const Vector<S>&>(v))) return;
      Index k = rest - 1;
      while (k >= 0 && ++digits[static_cast<std::size_t>(k)] == q) digits[static_cast<std::size_t>(k--)] = 0;
      if (k < 0) break;
    }
  }
}

/// q^n as a checked count.
template <class S>
  requires FieldTraits<S>::finite
std::size_t vector_count(Index n, const Caps& caps) {
  std::size_t total = 1;
  for (Index i = 0; i < n; ++i) {
    total *= FieldTraits<S>::size;
    if (total > caps.maxLieVectors)
      throw CapExceeded("p^dim exceeds the Lie enumeration cap (" + std::to_string(caps.maxLieVectors) + ")");
  }
  return total;
}

/// Every subspace of S^n, enumerated through echelon forms: for each pivot
/// set, every assignment of the free entries.
template <class S>
  requires FieldTraits<S>::finite
std::vector<Subspace<S>> all_subspaces(Index n, const Caps& caps = {}) {
  vector_count<S>(n, caps);
  const auto elems = FieldTraits<S>::elements();
  std::vector<Subspace<S>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<Index> piv;
    for (Index c = 0; c < n; ++c)
      if (mask >> c & 1) piv.push_back(c);
    const Index k = static_cast<Index>(piv.size());
    std::vector<std::pair<Index, Index>> freeSlots;
    for (Index r = 0; r < k; ++r)
      for (Index c = piv[static_cast<std::size_t>(r)] + 1; c < n; ++c)
        if (!(mask >> c & 1)) freeSlots.emplace_back(r, c);
    std::vector<std::size_t> digits(freeSlots.size(), 0);
    while (true) {
      Matrix<S> m = Matrix<S>::Zero(k, n);
      for (Index r = 0; r < k; ++r) m(r, piv[static_cast<std::size_t>(r)]) = S(1);
      for (std::size_t s = 0; s < freeSlots.size(); ++s) m(freeSlots[s].first, freeSlots[s].second) = elems[digits[s]];
      out.push_back(Subspace<S>::span(std::move(m)));
      std::size_t s = 0;
      while (s < digits.size() && ++digits[s] == elems.size()) digits[s++] = 0;
      if (s == digits.size()) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Every ideal, sorted by (dim, echelon entries).
template <class S>
  requires FieldTraits<S>::finite
std::vector<Subspace<S>> ideals(const LieAlgebra<S>& l, const Caps& caps = {}) {
  std::vector<Subspace<S>> out;
  for (auto& v : all_subspaces<S>(l.dim(), caps))
    if (is_ideal(l, v)) out.push_back(std::move(v));
  return out;
}

}  // namespace groupspec::lie
