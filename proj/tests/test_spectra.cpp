#include <random>

#include "doctest.h"
#include "groupspec/catalog.hpp"
#include "groupspec/error.hpp"
#include "groupspec/spectrum.hpp"
#include "oracles.hpp"

using namespace groupspec;

namespace {

Elem el(const FiniteGroup& g, const std::string& cycles) {
  auto e = g.find(parse_cycles(cycles, g.degree()));
  REQUIRE(e.has_value());
  return *e;
}

Subgroup ncl(const FiniteGroup& h, std::initializer_list<Elem> seed) {
  const std::vector<Elem> s(seed);
  return normal_closure(h, whole_group(h), s);
}

struct Fixture {
  const char* g;
  const char* h;
  const char* embed;
};

const std::vector<Fixture> kFixtures{
    {"sym:3", "sym:3", "identity"},
    {"sym:4", "sym:4", "identity"},
    {"sym:5", "sym:5", "identity"},
    {"sym:3", "sym:4", "fix-last"},
    {"sym:4", "sym:5", "fix-last"},
    {"cyc:2", "prod:cyc:2,cyc:4", "first-factor"},
    {"cyc:2", "prod:cyc:2,sym:3", "first-factor"},
    {"cyc:6", "prod:cyc:6,cyc:4", "first-factor"},
    {"cyc:6", "prod:cyc:6,sym:3", "first-factor"},
    {"sym:5", "prod:sym:5,cyc:2", "first-factor"},
    {"alt:5", "alt:5", "identity"},
    {"dih:4", "dih:4", "identity"},
    {"q8", "q8", "identity"},
    {"sym:3", "prod:sym:3,sym:3", "diagonal"},
    {"cyc:3", "prod:cyc:3,cyc:3", "diagonal"},
    {"alt:5", "prod:alt:5,alt:5", "diagonal"},
    {"sym:3", "prod:sym:3,cyc:2,cyc:2", "first-factor"},
};

oracle::ElemSet image_set(const GGroup& x) { return oracle::to_set(x.image()); }

}  // namespace

TEST_CASE("GGroup construction") {
  const auto g = build_group("cyc:2");
  const auto h = build_group("cyc:4");
  const std::vector<Elem> toTrivial{0};
  CHECK_THROWS_AS(GGroup(g, h, make_morphism(g, h, toTrivial)), InputError);
  const auto x = build_ggroup("sym:5", "prod:sym:5,cyc:2", "first-factor");
  CHECK(x.image().order() == 120);
}

TEST_CASE("orbit_subgroup and is_invertible") {
  const auto s5 = build_ggroup("sym:5", "sym:5", "identity");
  const Elem t = el(s5.ambient(), "(0 1)");
  CHECK(orbit_subgroup(s5, t).order() == 120);
  CHECK(is_invertible(s5, t));

  const auto c2 = build_ggroup("cyc:2", "cyc:2", "identity");
  CHECK(orbit_subgroup(c2, 1).order() == 2);

  const auto x = build_ggroup("sym:5", "prod:sym:5,cyc:2", "first-factor");
  const Elem c = el(x.ambient(), "(5 6)");
  const auto gc = orbit_subgroup(x, c);
  CHECK(gc.order() == 2);
  CHECK(center(x.ambient()) == gc);
  CHECK_FALSE(is_invertible(x, c));
  for (Elem g = 1; g < x.base().order(); ++g) CHECK(is_invertible(x, x.phi()(g)));

  for (const auto& f : kFixtures) {
    const auto y = build_ggroup(f.g, f.h, f.embed);
    if (y.ambient().order() > 120) continue;
    for (Elem e = 0; e < y.ambient().order(); ++e)
      CHECK(oracle::to_set(orbit_subgroup(y, e)) == oracle::orbit(y.ambient(), image_set(y), e));
  }
}

TEST_CASE("zero divisors") {
  const auto s3 = build_ggroup("sym:3", "sym:3", "identity");
  const Elem r = el(s3.ambient(), "(0 1 2)");
  const auto w = zero_divisor_witness(s3, r);
  REQUIRE(w.has_value());
  CHECK(s3.ambient().element_order(*w) == 3);
  CHECK(*w == oracle::zero_divisor_witness(s3.ambient(), image_set(s3), r));
  CHECK_THROWS_AS(zero_divisor_witness(s3, 0), InputError);

  const auto s5 = build_ggroup("sym:5", "sym:5", "identity");
  for (Elem e = 1; e < s5.ambient().order(); ++e) CHECK_FALSE(is_zero_divisor(s5, e));

  const auto x = build_ggroup("sym:5", "prod:sym:5,cyc:2", "first-factor");
  const FiniteGroup& h = x.ambient();
  const Elem c = el(h, "(5 6)");
  REQUIRE(is_zero_divisor(x, c));
  // c is its own witness; the reported one is the least.
  CHECK(commutator_subgroup(orbit_subgroup(x, c), orbit_subgroup(x, c)).is_trivial());
  const Elem least = *zero_divisor_witness(x, c);
  CHECK(commutator_subgroup(orbit_subgroup(x, c), orbit_subgroup(x, least)).is_trivial());
  for (Elem y = 1; y < least; ++y)
    CHECK_FALSE(commutator_subgroup(orbit_subgroup(x, c), orbit_subgroup(x, y)).is_trivial());

  SUBCASE("witness matches the all-pairs oracle") {
    for (const auto& f : kFixtures) {
      const auto y = build_ggroup(f.g, f.h, f.embed);
      if (y.ambient().order() > 24) continue;
      CAPTURE(f.h);
      for (Elem e = 1; e < y.ambient().order(); ++e) {
        const auto got = zero_divisor_witness(y, e);
        CHECK(got.value_or(0) == oracle::zero_divisor_witness(y.ambient(), image_set(y), e));
      }
      CHECK(is_domain(y) == oracle::is_domain(y.ambient(), image_set(y)));
    }
  }
  SUBCASE("status is constant on conjugation orbits") {
    for (const auto& f : kFixtures) {
      const auto y = build_ggroup(f.g, f.h, f.embed);
      const FiniteGroup& hh = y.ambient();
      for (Elem e = 1; e < hh.order(); ++e)
        for (Elem g : y.image().generators()) CHECK(is_zero_divisor(y, e) == is_zero_divisor(y, hh.conj(g, e)));
    }
  }
}

TEST_CASE("is_domain") {
  CHECK(is_domain(build_ggroup("sym:5", "sym:5", "identity")));
  CHECK(is_domain(build_ggroup("sym:5", "sym:6", "fix-last")));
  CHECK_FALSE(is_domain(build_ggroup("sym:4", "sym:4", "identity")));
  CHECK(is_domain(build_ggroup("alt:5", "alt:5", "identity")));

  const auto s4 = check_domain(build_ggroup("sym:4", "sym:4", "identity"));
  CHECK_FALSE(s4.isDomain);
  REQUIRE(s4.zeroDivisor.has_value());
  REQUIRE(s4.witness.has_value());
  const auto s6 = check_domain(build_ggroup("sym:5", "sym:6", "fix-last"));
  CHECK(s6.isDomain);
  CHECK(s6.orbitsScanned < 720);
}

TEST_CASE("is_prime and the commutator form") {
  const auto x = build_ggroup("sym:5", "prod:sym:5,cyc:2", "first-factor");
  const FiniteGroup& h = x.ambient();
  const auto c2 = ncl(h, {el(h, "(5 6)")});
  const auto a5 = ncl(h, {el(h, "(0 1 2)")});
  CHECK(a5.order() == 60);
  CHECK(is_prime(x, c2));
  CHECK_FALSE(is_prime(x, a5));
  CHECK_FALSE(is_prime(x, trivial_subgroup(h)));
  CHECK_THROWS_AS(is_prime(x, subgroup_closure(h, std::vector<Elem>{el(h, "(0 1)")})), InputError);

  const auto eq = prime_equivalence_check(x, c2);
  CHECK(eq.quotientTest);
  CHECK(eq.commutatorTest);
  CHECK_THROWS_AS(prime_equivalence_check(x, a5), InputError);

  const auto s3 = build_ggroup("sym:3", "sym:3", "identity");
  const auto e3 = prime_equivalence_check(s3, trivial_subgroup(s3.ambient()));
  CHECK_FALSE(e3.quotientTest);
  CHECK_FALSE(e3.commutatorTest);

  SUBCASE("equivalence on every fixture") {
    for (const auto& f : kFixtures) {
      const auto y = build_ggroup(f.g, f.h, f.embed);
      CAPTURE(f.h);
      for (const auto& p : normal_subgroups(y.ambient())) {
        if ((p.members() & y.image().members()).count() != 1) continue;
        const auto r = prime_equivalence_check(y, p);
        CHECK(r.agree());
        if (y.ambient().order() <= 24)
          CHECK(r.commutatorTest == oracle::prime_by_pairs(y.ambient(), image_set(y), oracle::to_set(p)));
      }
    }
  }
}

TEST_CASE("spectrum") {
  {
    const auto x = build_ggroup("sym:5", "prod:sym:5,cyc:2", "first-factor");
    const auto s = spectrum(x);
    REQUIRE(s.size() == 1);
    CHECK(s.points[0].subgroup == ncl(x.ambient(), {el(x.ambient(), "(5 6)")}));
  }
  CHECK(spectrum(build_ggroup("cyc:2", "prod:cyc:2,cyc:4", "first-factor")).size() == 0);
  {
    const auto x = build_ggroup("alt:5", "prod:alt:5,alt:5", "diagonal");
    const auto s = spectrum(x);
    CHECK(s.normals.size() == 4);
    REQUIRE(s.size() == 2);
    for (const auto& p : s.points) CHECK(p.subgroup.order() == 60);
    // discrete: every subset closed
    CHECK(s.closedSets.size() == 4);
    CHECK(s.specialization.empty());
  }
  {
    const auto s = spectrum(build_ggroup("sym:5", "sym:5", "identity"));
    REQUIRE(s.size() == 1);
    CHECK(s.points[0].subgroup.is_trivial());
  }

  SUBCASE("invariants on every fixture") {
    for (const auto& f : kFixtures) {
      const auto x = build_ggroup(f.g, f.h, f.embed);
      CAPTURE(f.h);
      const auto s = spectrum(x);
      CHECK(satisfies_closed_set_axioms(s.size(), s.closedSets));
      for (std::size_t i = 0; i + 1 < s.size(); ++i) CHECK(s.points[i].subgroup < s.points[i + 1].subgroup);
      for (const auto& p : s.points) CHECK(is_prime(x, p.subgroup));
      std::size_t primes = 0;
      for (const auto& n : s.normals) primes += is_prime(x, n);
      CHECK(primes == s.size());
      for (const auto& c : s.closedSets) {
        bool isV = c.none();
        for (const auto& v : s.vanishing) isV = isV || v == c;
        CHECK(isV);
      }
      if (x.base().is_abelian() && x.base().order() > 1) CHECK(s.size() == 0);
      // V([I,J]) = V(I) ∪ V(J)
      for (std::size_t i = 0; i < s.normals.size(); ++i)
        for (std::size_t j = 0; j < s.normals.size(); ++j) {
          const auto c = commutator_subgroup(s.normals[i], s.normals[j]);
          CHECK(vanishing_set(s, c) == (s.vanishing[i] | s.vanishing[j]));
        }
      // V(<I ∪ J ∪ K>) = V(I) ∩ V(J) ∩ V(K)
      const std::size_t n = s.normals.size();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
          for (std::size_t k = j; k < n; ++k) {
            const auto u = join(join(s.normals[i], s.normals[j]), s.normals[k]);
            CHECK(vanishing_set(s, u) == (s.vanishing[i] & s.vanishing[j] & s.vanishing[k]));
          }
    }
  }
  SUBCASE("abelian base groups give empty spectra") {
    for (const char* h : {"prod:cyc:2,cyc:4", "prod:cyc:2,sym:3", "prod:cyc:2,alt:5", "prod:cyc:2,q8"})
      CHECK(spectrum(build_ggroup("cyc:2", h, "first-factor")).size() == 0);
    CHECK(spectrum(build_ggroup("cyc:3", "prod:cyc:3,cyc:3", "diagonal")).size() == 0);
  }
}

TEST_CASE("vanishing_set") {
  const auto x = build_ggroup("alt:5", "prod:alt:5,alt:5", "diagonal");
  const auto s = spectrum(x);
  const FiniteGroup& h = x.ambient();
  CHECK(vanishing_set(s, trivial_subgroup(h)) == Bitset::full(s.size()));
  CHECK(vanishing_set(s, whole_group(h)).none());
  const auto left = ncl(h, {el(h, "(0 1 2)")});
  const auto v = vanishing_set(s, left);
  CHECK(v.count() == 1);
  CHECK(s.points[v.first()].subgroup == left);
  for (std::size_t i = 0; i < s.normals.size(); ++i)
    if ((s.normals[i].members() & x.image().members()).count() > 1) CHECK(s.vanishing[i].none());

  const auto s4 = build_ggroup("sym:4", "sym:4", "identity");
  const auto sp4 = spectrum(s4);
  CHECK_THROWS_AS(vanishing_set(sp4, subgroup_closure(s4.ambient(), std::vector<Elem>{1})), InputError);
}

TEST_CASE("induced_map") {
  const auto s5 = build_group("sym:5");
  const auto h = build_group("prod:sym:5,cyc:2");
  const GGroup x(s5, s5, identity_morphism(s5));
  const GGroup y(s5, h, named_embedding(s5, h, "first-factor"));
  const auto sx = spectrum(x);
  const auto sy = spectrum(y);
  const auto m = induced_map(sx, sy, y.phi());
  REQUIRE(m.pointMap.size() == 1);
  CHECK(sx.points[m.pointMap[0]].subgroup.is_trivial());
  CHECK(m.closedSetsChecked == sx.normals.size());

  const auto id = induced_map(sy, sy, identity_morphism(h));
  for (std::size_t j = 0; j < id.pointMap.size(); ++j) CHECK(id.pointMap[j] == j);

  SUBCASE("non-G-morphisms are rejected") {
    const auto a5 = build_group("alt:5");
    const auto a5a5 = build_group("prod:alt:5,alt:5");
    const GGroup first(a5, a5a5, named_embedding(a5, a5a5, "first-factor"));
    const GGroup target(a5, a5, identity_morphism(a5));
    // Projection onto the second factor kills phi(G).
    std::vector<Elem> gens;
    for (Elem gen : a5a5.generators()) {
      const auto& p = a5a5.permutation(gen);
      Permutation second(5);
      for (std::size_t i = 0; i < 5; ++i) second[i] = p[i + 5] - 5;
      gens.push_back(*a5.find(second));
    }
    const auto proj = make_morphism(a5a5, a5, gens);
    CHECK_THROWS_AS(induced_map(spectrum(first), spectrum(target), proj), InputError);
  }

  SUBCASE("quotient maps on every fixture") {
    for (const auto& f : kFixtures) {
      const auto g = build_group(f.g);
      const auto hh = build_group(f.h);
      const GGroup z(g, hh, named_embedding(g, hh, f.embed));
      const auto sz = spectrum(z);
      for (const auto& n : sz.normals) {
        if ((n.members() & z.image().members()).count() != 1) continue;
        const auto q = quotient(n);
        const GGroup zq = quotient_ggroup(z, q);
        const auto sq = spectrum(zq);
        const auto im = induced_map(sz, sq, q.projection);
        CHECK(im.pointMap.size() == sq.size());
        for (std::size_t j = 0; j < sq.size(); ++j) CHECK(is_prime(z, sz.points[im.pointMap[j]].subgroup));
      }
    }
  }
}

TEST_CASE("l_point") {
  {
    const auto x = build_ggroup("sym:5", "prod:sym:5,cyc:2", "first-factor");
    const auto s = spectrum(x);
    const auto m = l_point(s, 0);
    CHECK(m.target().order() == 120);
    CHECK(m.kernel().order() == 2);
    CHECK(m.image().order() == 120);
  }
  {
    const auto s = spectrum(build_ggroup("sym:5", "sym:5", "identity"));
    CHECK(l_point(s, 0).is_injective());
    CHECK_THROWS_AS(l_point(s, 1), InputError);
  }
  {
    const auto x = build_ggroup("alt:5", "prod:alt:5,alt:5", "diagonal");
    const auto s = spectrum(x);
    for (std::size_t p = 0; p < s.size(); ++p) {
      const auto m = l_point(s, p);
      CHECK(m.target().order() == 60);
      CHECK(m.kernel() == s.points[p].subgroup);
    }
  }
}

TEST_CASE("absolute_spectrum") {
  const auto a5 = absolute_spectrum(build_group("alt:5"));
  REQUIRE(a5.size() == 1);
  CHECK(a5.points[0].subgroup.is_trivial());
  CHECK(absolute_spectrum(build_group("cyc:6")).size() == 0);

  for (const char* name : {"sym:4", "sym:3", "dih:4", "q8", "prod:sym:3,sym:3", "sym:5",
                           "prod:alt:5,cyc:2", "alt:4"}) {
    CAPTURE(name);
    const auto g = build_group(name);
    const auto s = absolute_spectrum(g);
    CHECK(satisfies_closed_set_axioms(s.size(), s.closedSets));
    // quantifier oracle over the normal lattice
    std::vector<oracle::ElemSet> ns;
    for (const auto& n : oracle::normal_subgroups_by_class_subsets(g)) ns.push_back(n);
    std::size_t expected = 0;
    for (const auto& p : ns) {
      if (p.size() == g.order()) continue;
      bool prime = true;
      for (const auto& i : ns)
        for (const auto& j : ns) {
          const auto c = oracle::commutator(g, i, j);
          auto sub = [&](const oracle::ElemSet& a) { return std::includes(p.begin(), p.end(), a.begin(), a.end()); };
          if (sub(c) && !sub(i) && !sub(j)) prime = false;
        }
      if (prime) {
        ++expected;
        bool found = false;
        for (const auto& pt : s.points) found = found || oracle::to_set(pt.subgroup) == p;
        CHECK(found);
      }
    }
    CHECK(s.size() == expected);
  }
  CHECK(absolute_spectrum(build_group("sym:4")).size() == 0);
  CHECK(absolute_spectrum(build_group("prod:alt:5,alt:5")).size() == 2);
}

TEST_CASE("normalizer of a complete base in a domain") {
  for (const auto& f : kFixtures) {
    const auto x = build_ggroup(f.g, f.h, f.embed);
    if (!is_complete(x.base()) || !is_domain(x)) continue;
    CAPTURE(f.h);
    CHECK(normalizer(x.ambient(), x.image()) == x.image());
  }
  const auto x = build_ggroup("sym:5", "sym:6", "fix-last");
  CHECK(normalizer(x.ambient(), x.image()) == x.image());
}
