#include <set>

#include "doctest.h"
#include "groupspec/lie/catalog.hpp"
#include "groupspec/lie/spectrum.hpp"

using namespace groupspec;
using namespace groupspec::lie;

namespace {

template <class S>
SLie<S> named(const std::string& s, const std::string& g, const std::string& embed) {
  const auto ns = parse_lie_name(s), ng = parse_lie_name(g);
  return SLie<S>(build_lie<S>(ns), build_lie<S>(ng), lie_embedding<S>(ns, ng, embed));
}

template <class S>
Vector<S> vec(std::initializer_list<long long> v) {
  Vector<S> r(static_cast<Index>(v.size()));
  Index i = 0;
  for (auto x : v) r(i++) = S(x);
  return r;
}

/// Two-dimensional nonabelian algebra [a, b] = b.
template <class S>
LieAlgebra<S> affine_line() {
  using B = typename LieAlgebra<S>::Bracket;
  return LieAlgebra<S>::from_brackets(2, {B{0, 1, vec<S>({0, 1})}}, "aff");
}

// Oracle: ideals as the join closure of principal ideals.
template <class S>
std::set<Subspace<S>> ideals_by_principal_joins(const LieAlgebra<S>& l) {
  std::set<Subspace<S>> principal;
  for_each_projective_point<S>(l.dim(), [&](const Vector<S>& v) {
    principal.insert(ideal_closure(l, Subspace<S>::of(v)));
    return true;
  });
  std::set<Subspace<S>> all(principal);
  all.insert(Subspace<S>(l.dim()));
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Subspace<S>> cur(all.begin(), all.end());
    for (const auto& a : cur)
      for (const auto& p : principal) grew = all.insert(sum(a, p)).second || grew;
  }
  return all;
}

// Oracle: zero divisor by scanning every line y outside phi(S) and forming
// [S(x), S(y)] directly.
template <class S>
bool zero_divisor_by_scan(const SLie<S>& x, const Vector<S>& v) {
  const auto sx = orbit_subspace(x, v);
  bool found = false;
  for_each_projective_point<S>(x.ambient().dim(), [&](const Vector<S>& y) {
    if (x.image().contains(y)) return true;
    if (bracket_subspace(x.ambient(), sx, orbit_subspace(x, y)).is_zero()) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

template <class S>
bool domain_by_scan(const SLie<S>& x) {
  bool domain = true;
  for_each_projective_point<S>(x.ambient().dim(), [&](const Vector<S>& v) {
    if (x.image().contains(v)) return true;
    if (zero_divisor_by_scan(x, v)) domain = false;
    return domain;
  });
  return domain;
}

template <class S>
std::vector<SLie<S>> fixtures() {
  std::vector<SLie<S>> f;
  f.push_back(named<S>("lie:sl2@" + std::to_string(S::modulus), "lie:gl2@" + std::to_string(S::modulus), "canonical"));
  f.push_back(named<S>("lie:sl2@" + std::to_string(S::modulus), "lie:sl2@" + std::to_string(S::modulus), "identity"));
  f.push_back(named<S>("lie:abelian:1@" + std::to_string(S::modulus), "lie:heis@" + std::to_string(S::modulus), "canonical"));
  f.push_back(named<S>("lie:abelian:1@" + std::to_string(S::modulus), "lie:abelian:3@" + std::to_string(S::modulus), "canonical"));
  {  // diagonal matrices in gl2
    Matrix<S> diag = Matrix<S>::Zero(4, 2);
    diag(0, 0) = S(1), diag(3, 1) = S(1);
    f.emplace_back(LieAlgebra<S>::abelian(2), build_lie<S>(parse_lie_name("lie:gl2@" + std::to_string(S::modulus))), diag);
  }
  const auto aff = affine_line<S>();
  f.emplace_back(LieAlgebra<S>::abelian(1), aff, Matrix<S>(vec<S>({1, 0})));
  f.emplace_back(LieAlgebra<S>::abelian(1), aff, Matrix<S>(vec<S>({0, 1})));
  return f;
}

}  // namespace

TEST_CASE("finite field arithmetic") {
  using F = Zp<5>;
  CHECK(F(3) + F(4) == F(2));
  CHECK(F(2) * F(3) == F(1));
  CHECK(F(1) / F(3) == F(2));
  CHECK(-F(1) == F(4));
  CHECK(F(-7) == F(3));
  CHECK_THROWS_AS(F(0).inverse(), InputError);
  for (long long a = 1; a < 7; ++a) CHECK(Zp<7>(a) * Zp<7>(a).inverse() == Zp<7>(1));
  CHECK_THROWS_AS(with_prime(4, []<class S>() { return 0; }), InputError);
  CHECK(with_prime(3, []<class S>() { return static_cast<int>(S::modulus); }) == 3);
}

TEST_CASE("linear algebra over F_p") {
  using F = Zp<3>;
  Matrix<F> m(2, 3);
  m << F(1), F(2), F(0), F(2), F(1), F(0);
  CHECK(rank<F>(m) == 1);
  const auto ns = nullspace<F>(m);
  CHECK(ns.cols() == 2);
  CHECK(is_zero(Matrix<F>(m * ns)));

  const auto a = Subspace<F>::span(m);
  CHECK(a.dim() == 1);
  const auto b = Subspace<F>::of(vec<F>({0, 0, 1}));
  CHECK(sum(a, b).dim() == 2);
  CHECK(intersection(a, b).is_zero());
  CHECK(intersection(sum(a, b), Subspace<F>::whole(3)) == sum(a, b));
  // intersection agrees with membership on every pair of subspaces of F_3^3
  const auto all = all_subspaces<F>(3);
  CHECK(all.size() == 1 + 13 + 13 + 1);
  for (const auto& u : all)
    for (const auto& v : all) {
      const auto w = intersection(u, v);
      CHECK(w.is_subspace_of(u));
      CHECK(w.is_subspace_of(v));
      CHECK(sum(u, v).dim() + w.dim() == u.dim() + v.dim());
    }
  // canonical forms are unique
  std::set<Subspace<F>> distinct(all.begin(), all.end());
  CHECK(distinct.size() == all.size());
  Caps tight;
  tight.maxLieVectors = 26;
  CHECK_THROWS_AS(all_subspaces<F>(3, tight), CapExceeded);
}

TEST_CASE("lie_from_constants") {
  using F = Zp<5>;
  const auto sl2 = build_lie<F>(parse_lie_name("lie:sl2@5"));
  CHECK(sl2.dim() == 3);
  CHECK_FALSE(sl2.axiom_failure().has_value());
  CHECK(sl2.bracket(vec<F>({0, 1, 0}), vec<F>({1, 0, 0})) == vec<F>({2, 0, 0}));
  CHECK(LieAlgebra<F>::abelian(4).is_abelian());

  using B = LieAlgebra<F>::Bracket;
  CHECK_THROWS_AS(LieAlgebra<F>::from_brackets(2, {B{0, 0, vec<F>({1, 0})}}), InputError);
  // [e0,e1] = e2, [e1,e2] = e0, [e0,e2] = e0 violates Jacobi
  CHECK_THROWS_AS(LieAlgebra<F>::from_brackets(3, {B{0, 1, vec<F>({0, 0, 1})}, B{1, 2, vec<F>({1, 0, 0})},
                                                   B{0, 2, vec<F>({1, 0, 0})}}),
                  InputError);
  CHECK_THROWS_AS(LieAlgebra<F>::from_brackets(2, {B{0, 1, vec<F>({1, 0})}, B{1, 0, vec<F>({1, 0})}}), InputError);

  for (const char* name : {"lie:sl2@2", "lie:sl2@3", "lie:gl2@5", "lie:heis@3", "lie:abelian:3@3", "lie:gl2@7"}) {
    const auto n = parse_lie_name(name);
    CHECK(with_prime(n.p, [&]<class S>() { return build_lie<S>(n).dim(); }) == n.dim);
  }
  CHECK(parse_lie_name("lie:gl2@5").dim == 4);
  CHECK_THROWS_AS(parse_lie_name("lie:so3@5"), InputError);
  CHECK_THROWS_AS(parse_lie_name("lie:sl2"), InputError);
  CHECK_THROWS_AS(parse_lie_name("sl2@5"), InputError);
  CHECK_THROWS_AS(parse_lie_name("lie:abelian:0@5"), InputError);
}

TEST_CASE("rational scalars") {
  using Q = Rational;
  const auto sl2 = build_lie<Q>(parse_lie_name("lie:sl2@0"));
  CHECK_FALSE(sl2.axiom_failure().has_value());
  const auto gl2 = build_lie<Q>(parse_lie_name("lie:gl2@0"));
  const auto x = SLie<Q>(sl2, gl2, lie_embedding<Q>(parse_lie_name("lie:sl2@0"), parse_lie_name("lie:gl2@0"), "canonical"));
  CHECK(orbit_subspace(x, vec<Q>({1, 0, 0, 1})).dim() == 1);
  CHECK(orbit_subspace(x, vec<Q>({0, 1, 0, 0})).dim() == 3);
  Vector<Q> half(3);
  half << Q(1, 2), Q(0), Q(0);
  CHECK(Subspace<Q>::of(half).basis_vector(0) == vec<Q>({1, 0, 0}));
  const auto center = Subspace<Q>::of(vec<Q>({1, 0, 0, 1}));
  const auto q = quotient(gl2, center);
  CHECK(q.algebra.dim() == 3);
}

TEST_CASE("orbit_subspace") {
  using F = Zp<5>;
  const auto x = named<F>("lie:sl2@5", "lie:gl2@5", "canonical");
  CHECK(orbit_subspace(x, vec<F>({1, 0, 0, 1})).dim() == 1);
  const auto e = orbit_subspace(x, vec<F>({0, 1, 0, 0}));
  CHECK(e.dim() == 3);
  CHECK(e == x.image());
  CHECK(orbit_subspace(x, vec<F>({0, 0, 0, 0})).is_zero());

  SUBCASE("least stable subspace, by exhaustive scan") {
    for (const auto& f : fixtures<F>()) {
      const auto subs = all_subspaces<F>(f.ambient().dim());
      std::vector<Subspace<F>> stable;
      for (const auto& v : subs) {
        bool ok = true;
        for (const auto& a : f.image_ads())
          for (Index k = 0; k < v.dim() && ok; ++k) ok = v.contains(a * v.basis_vector(k));
        if (ok) stable.push_back(v);
      }
      for_each_projective_point<F>(f.ambient().dim(), [&](const Vector<F>& v) {
        Subspace<F> least = Subspace<F>::whole(f.ambient().dim());
        for (const auto& s : stable)
          if (s.contains(v)) least = intersection(least, s);
        CHECK(orbit_subspace(f, v) == least);
        return true;
      });
    }
  }
}

TEST_CASE("zero divisors and domains") {
  using F = Zp<5>;
  const auto x = named<F>("lie:sl2@5", "lie:gl2@5", "canonical");
  const auto id = vec<F>({1, 0, 0, 1});
  CHECK(is_zero_divisor(x, id));
  // the identity matrix commutes with everything, itself included
  CHECK(bracket_subspace(x.ambient(), orbit_subspace(x, id), orbit_subspace(x, id)).is_zero());
  CHECK_THROWS_AS(zero_divisor_witness(x, vec<F>({0, 1, 0, 0})), InputError);
  CHECK_THROWS_AS(zero_divisor_witness(x, vec<F>({0, 0, 0, 0})), InputError);
  CHECK_FALSE(is_domain(x));

  const auto center = Subspace<F>::of(id);
  const auto q = quotient_slie(x, quotient(x.ambient(), center));
  CHECK(q.ambient().dim() == 3);
  CHECK(is_domain(q));

  for (const auto& f : fixtures<F>()) {
    CHECK(is_domain(f) == domain_by_scan(f));
    for_each_projective_point<F>(f.ambient().dim(), [&](const Vector<F>& v) {
      if (f.image().contains(v)) return true;
      const auto w = zero_divisor_witness(f, v);
      CHECK(w.has_value() == zero_divisor_by_scan(f, v));
      if (w) {
        CHECK_FALSE(f.image().contains(*w));
        CHECK(bracket_subspace(f.ambient(), orbit_subspace(f, v), orbit_subspace(f, *w)).is_zero());
      }
      return true;
    });
  }
  for (const auto& f : fixtures<Zp<3>>()) CHECK(is_domain(f) == domain_by_scan(f));
}

TEST_CASE("ideal enumeration") {
  using F = Zp<5>;
  const auto gl2 = build_lie<F>(parse_lie_name("lie:gl2@5"));
  const auto ids = ideals(gl2);
  CHECK(ids.size() == 4);
  const auto oracle = ideals_by_principal_joins(gl2);
  CHECK(std::set<Subspace<F>>(ids.begin(), ids.end()) == oracle);
  for (const auto& f : fixtures<F>()) {
    const auto all = ideals(f.ambient());
    CHECK(std::set<Subspace<F>>(all.begin(), all.end()) == ideals_by_principal_joins(f.ambient()));
    CHECK(std::is_sorted(all.begin(), all.end()));
  }
  for (const auto& f : fixtures<Zp<3>>()) {
    const auto all = ideals(f.ambient());
    CHECK(std::set<Subspace<Zp<3>>>(all.begin(), all.end()) == ideals_by_principal_joins(f.ambient()));
  }
  Caps tiny;
  tiny.maxLieVectors = 100;
  CHECK_THROWS_AS(ideals(gl2, tiny), CapExceeded);
}

TEST_CASE("spec_lie") {
  using F = Zp<5>;
  const auto x = named<F>("lie:sl2@5", "lie:gl2@5", "canonical");
  const auto s = spec_lie(x);
  REQUIRE(s.size() == 1);
  CHECK(s.point(0) == Subspace<F>::of(vec<F>({1, 0, 0, 1})));
  CHECK(v_lie(s, Subspace<F>(4)) == Bitset::full(1));
  CHECK_THROWS_AS(v_lie(s, Subspace<F>::of(vec<F>({0, 1, 0, 0}))), InputError);
  CHECK_THROWS_AS(is_prime(x, Subspace<F>::of(vec<F>({0, 1, 0, 0}))), InputError);

  // S = sl2 = G: only the zero ideal is prime (nothing lies outside S)
  CHECK(spec_lie(named<F>("lie:sl2@5", "lie:sl2@5", "identity")).size() == 1);

  // abelian S: the Lie spectrum need not be empty; the count is the number
  // of complements of the image line.
  using G = Zp<3>;
  const auto ab = spec_lie(named<G>("lie:abelian:1@3", "lie:abelian:3@3", "canonical"));
  CHECK(ab.size() == 9);
  const auto heis = spec_lie(named<G>("lie:abelian:1@3", "lie:heis@3", "canonical"));
  for (std::size_t i = 0; i < heis.size(); ++i) CHECK(heis.point(i).dim() == 2);

  SUBCASE("commutator identity where phi(S) cannot absorb an ideal") {
    auto holds = [](const auto& f) {
      const auto sp = spec_lie(f);
      for (std::size_t a = 0; a < sp.ideals.size(); ++a)
        for (std::size_t b = 0; b < sp.ideals.size(); ++b)
          if (!(v_lie(sp, bracket_subspace(f.ambient(), sp.ideals[a], sp.ideals[b])) ==
                (sp.vanishing[a] | sp.vanishing[b])))
            return false;
      return true;
    };
    CHECK(holds(named<F>("lie:sl2@5", "lie:gl2@5", "canonical")));
    Matrix<G> z = Matrix<G>::Zero(3, 1);
    z(2, 0) = G(1);
    CHECK(holds(SLie<G>(LieAlgebra<G>::abelian(1), build_lie<G>(parse_lie_name("lie:heis@3")), z)));
    CHECK(holds(SLie<G>(LieAlgebra<G>::abelian(0), LieAlgebra<G>::abelian(3), Matrix<G>(3, 0))));
    // abelian:1 in abelian:3: [I,I] = 0 lies in every point, but a line I
    // outside phi(S) misses most complements of phi(S)
    const auto x = named<G>("lie:abelian:1@3", "lie:abelian:3@3", "canonical");
    CHECK_FALSE(holds(x));
    const auto sx = spec_lie(x);
    const auto line = Subspace<G>::of(vec<G>({0, 0, 1}));
    CHECK(v_lie(sx, bracket_subspace(x.ambient(), line, line)).count() == 9);
    CHECK(v_lie(sx, line).count() == 3);
  }

  SUBCASE("invariants on every fixture") {
    for (const auto& f : fixtures<F>()) {
      const auto sp = spec_lie(f);
      const std::set<Bitset> basic(sp.basicClosed.begin(), sp.basicClosed.end());
      CHECK(basic.count(Bitset(sp.size())));
      CHECK(basic.count(Bitset::full(sp.size())));
      for (const auto& a : basic)
        for (const auto& b : basic) CHECK(basic.count(a & b));
      if (sp.size() <= 8) {
        const auto t = FiniteTopology::generated_by(sp.size(), sp.basicClosed);
        CHECK(satisfies_closed_set_axioms(sp.size(), t.closedSets));
      }
      const auto& is = sp.ideals;
      for (std::size_t p = 0; p < sp.size(); ++p) CHECK(intersection(sp.point(p), f.image()).is_zero());
      // prime <=> quotient has no zero divisors, by the scanning oracle
      for (const auto& i : is) {
        bool expected = false;
        if (intersection(i, f.image()).is_zero())
          expected = domain_by_scan(quotient_slie(f, quotient(f.ambient(), i)));
        CHECK(is_prime(f, i) == expected);
        CHECK(sp.point_index(i).has_value() == expected);
      }
      for (std::size_t a = 0; a < is.size(); ++a)
        for (std::size_t b = 0; b < is.size(); ++b) {
          const auto br = bracket_subspace(f.ambient(), is[a], is[b]);
          CHECK(is_ideal(f.ambient(), br));
          const Bitset lhs = v_lie(sp, br), rhs = sp.vanishing[a] | sp.vanishing[b];
          CHECK(rhs.is_subset_of(lhs));
          // Any extra point P is one where I or J lies in P + phi(S): the
          // elements that would witness a zero divisor are excluded from
          // the definition.
          for (auto p : (lhs - rhs).members()) {
            const auto ps = sum(sp.point(p), f.image());
            CHECK((is[a].is_subspace_of(ps) || is[b].is_subspace_of(ps)));
          }
          CHECK(v_lie(sp, sum(is[a], is[b])) == (sp.vanishing[a] & sp.vanishing[b]));
          for (std::size_t c = b; c < is.size(); ++c)
            CHECK(v_lie(sp, sum(sum(is[a], is[b]), is[c])) == (sp.vanishing[a] & sp.vanishing[b] & sp.vanishing[c]));
        }
    }
  }
}

TEST_CASE("quotient_lie") {
  using F = Zp<5>;
  const auto gl2 = build_lie<F>(parse_lie_name("lie:gl2@5"));
  const auto center = Subspace<F>::of(vec<F>({1, 0, 0, 1}));
  const auto q = quotient(gl2, center);
  CHECK(q.algebra.dim() == 3);
  CHECK_FALSE(q.algebra.axiom_failure().has_value());
  // gl2 / center is isomorphic to sl2: the projection restricted to the
  // trace-zero image is a bijective morphism
  const auto sl2 = build_lie<F>(parse_lie_name("lie:sl2@5"));
  const Matrix<F> phi = lie_embedding<F>(parse_lie_name("lie:sl2@5"), parse_lie_name("lie:gl2@5"), "canonical");
  const Matrix<F> iso = q.projection * phi;
  CHECK(rank<F>(iso) == 3);
  CHECK(is_morphism(sl2, q.algebra, iso));
  CHECK(is_morphism(gl2, q.algebra, q.projection));
  CHECK_THROWS_AS(quotient(gl2, Subspace<F>::of(vec<F>({0, 1, 0, 0}))), InputError);

  for (const auto& f : fixtures<F>())
    for (const auto& i : ideals(f.ambient())) {
      const auto qq = quotient(f.ambient(), i);
      CHECK(qq.algebra.dim() == f.ambient().dim() - i.dim());
      CHECK(is_morphism(f.ambient(), qq.algebra, qq.projection));
      CHECK(Subspace<F>::span_columns(nullspace<F>(qq.projection)) == i);
    }
}

TEST_CASE("induced_map_lie") {
  using F = Zp<5>;
  const auto sl2n = parse_lie_name("lie:sl2@5"), gl2n = parse_lie_name("lie:gl2@5");
  const auto sl2 = build_lie<F>(sl2n);
  const auto gl2 = build_lie<F>(gl2n);
  const Matrix<F> inc = lie_embedding<F>(sl2n, gl2n, "canonical");
  const SLie<F> x(sl2, sl2, Matrix<F>::Identity(3, 3));
  const SLie<F> y(sl2, gl2, inc);
  const auto sx = spec_lie(x), sy = spec_lie(y);
  const auto m = induced_map_lie(x, sx, y, sy, inc);
  REQUIRE(m.pointMap.size() == 1);
  CHECK(sx.point(m.pointMap[0]).is_zero());
  CHECK(m.closedSetsChecked == sx.ideals.size());

  const auto idm = induced_map_lie(y, sy, y, sy, Matrix<F>(Matrix<F>::Identity(4, 4)));
  CHECK(idm.pointMap == std::vector<std::size_t>{0});

  // a non-morphism and a map that breaks the structure maps
  Matrix<F> bad = Matrix<F>::Zero(4, 4);
  bad(0, 1) = F(1);
  CHECK_THROWS_AS(induced_map_lie(y, sy, y, sy, bad), InputError);
  Matrix<F> twice = inc * F(2);
  CHECK_THROWS_AS(induced_map_lie(x, sx, y, sy, twice), InputError);

  SUBCASE("quotient maps over full ideal lattices") {
    auto run = [](const auto& f) {
      using T = typename std::decay_t<decltype(f.phi())>::Scalar;
      const auto sf = spec_lie(f);
      for (const auto& i : sf.ideals) {
        if (!intersection(i, f.image()).is_zero()) continue;
        const auto q = quotient(f.ambient(), i);
        const auto fq = quotient_slie(f, q);
        const auto sq = spec_lie(fq);
        const auto im = induced_map_lie(f, sf, fq, sq, q.projection);
        CHECK(im.closedSetsChecked == sf.ideals.size());
        for (auto p : im.pointMap) CHECK(is_prime<T>(f, sf.point(p)));
      }
    };
    for (const auto& f : fixtures<F>()) run(f);
    for (const auto& f : fixtures<Zp<3>>()) run(f);
  }
}

TEST_CASE("lie_sum and lie_product") {
  using F = Zp<5>;
  SUBCASE("sum of an object with itself") {
    for (const auto& f : fixtures<F>()) {
      const auto s = lie_sum(f, f);
      CHECK_FALSE(s.quotient.algebra.axiom_failure().has_value());
      // oracle: ideal generated by the differences, by closing principal ideals
      const Index m = f.ambient().dim();
      std::vector<Subspace<F>> parts;
      for (Index i = 0; i < f.base().dim(); ++i) {
        Vector<F> d(2 * m);
        d << f.phi().col(i), -f.phi().col(i);
        parts.push_back(ideal_closure(s.directSum, Subspace<F>::of(d)));
      }
      Subspace<F> rel(2 * m);
      for (const auto& p : parts) rel = sum(rel, p);
      CHECK(rel == s.relations);
      CHECK(s.quotient.algebra.dim() == 2 * m - rel.dim());
      if (s.injective) {
        REQUIRE(s.object.has_value());
        CHECK(s.object->ambient().dim() == s.quotient.algebra.dim());
      }
    }
  }
  SUBCASE("S = G = H collapses to S when S is abelian") {
    for (Index d = 1; d <= 3; ++d) {
      const SLie<F> x(LieAlgebra<F>::abelian(d), LieAlgebra<F>::abelian(d), Matrix<F>::Identity(d, d));
      const auto s = lie_sum(x, x);
      CHECK(s.quotient.algebra.dim() == d);
      CHECK(s.injective);
    }
    // sl2 is perfect: the differences generate everything and the induced
    // map cannot be injective
    const auto sl = named<F>("lie:sl2@5", "lie:sl2@5", "identity");
    const auto s = lie_sum(sl, sl);
    CHECK(s.quotient.algebra.dim() == 0);
    CHECK_FALSE(s.injective);
    CHECK_FALSE(s.object.has_value());
  }
  SUBCASE("product") {
    for (const auto& f : fixtures<F>()) {
      const SLie<F> base(f.base(), f.base(), Matrix<F>::Identity(f.base().dim(), f.base().dim()));
      const auto p = lie_product(f, base);
      CHECK(p.ambient().dim() == f.ambient().dim() + f.base().dim());
      CHECK_FALSE(p.ambient().axiom_failure().has_value());
      CHECK(p.phi().topRows(f.ambient().dim()) == f.phi());
      CHECK(p.phi().bottomRows(f.base().dim()) == Matrix<F>::Identity(f.base().dim(), f.base().dim()));
    }
  }
}
