#include "groupspec/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>

#include "groupspec/catalog.hpp"
#include "groupspec/equations.hpp"
#include "groupspec/error.hpp"
#include "groupspec/lie/catalog.hpp"
#include "groupspec/lie/io.hpp"
#include "groupspec/lie/spectrum.hpp"
#include "groupspec/sheaf.hpp"
#include "groupspec/spectrum.hpp"

namespace groupspec {

namespace {

constexpr std::size_t kMaxReported = 5;
// Families of normal subgroups are checked exhaustively up to this many
// members of the lattice, and up to size three beyond it.
constexpr std::size_t kExhaustiveFamilies = 12;

struct Tally {
  std::size_t checks = 0;
  std::size_t failed = 0;
  Json counterexamples = Json::array();

  void expect(bool ok, const std::function<Json()>& detail) {
    ++checks;
    if (ok) return;
    ++failed;
    if (counterexamples.size() < kMaxReported) counterexamples.push_back(detail());
  }
  bool pass() const { return failed == 0; }
};

Json finish(const std::string& scope, Tally& t, Json details) {
  const ScopeInfo* info = find_scope(scope);
  Json j;
  j["scope"] = scope;
  j["criterion"] = info ? info->criterion : 0;
  j["pass"] = t.pass();
  j["checks"] = t.checks;
  j["failed"] = t.failed;
  j["details"] = std::move(details);
  j["counterexamples"] = std::move(t.counterexamples);
  return j;
}

std::string fixture_name(const CatalogTriple& c) { return c.g + " in " + c.h + " (" + c.embed + ")"; }

const CatalogTriple kOnePoint{"sym:5", "prod:sym:5,cyc:2", "first-factor"};
const CatalogTriple kTwoPoint{"alt:5", "prod:alt:5,alt:5", "diagonal"};

struct Fixture {
  std::string name;
  GGroup x;
};

GGroup build(const CatalogTriple& c, const Caps& caps) { return build_ggroup(c.g, c.h, c.embed, caps); }

/// Named fixtures, then every catalog triple with |H| <= maxOrder.
std::vector<Fixture> sweep(const VerifyOptions& opts) {
  std::vector<Fixture> out;
  out.push_back({fixture_name(kOnePoint), build(kOnePoint, opts.caps)});
  out.push_back({fixture_name(kTwoPoint), build(kTwoPoint, opts.caps)});
  Caps capped = opts.caps;
  capped.maxGroupOrder = std::min(capped.maxGroupOrder, opts.maxOrder);
  for (const auto& c : catalog_ggroups()) {
    try {
      out.push_back({fixture_name(c), build(c, capped)});
    } catch (const CapExceeded&) {
    }
  }
  return out;
}

std::vector<std::size_t> cycle_type(const Permutation& p) {
  std::vector<std::size_t> t;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) seen[j] = true, ++len;
    if (len > 1) t.push_back(len);
  }
  std::sort(t.begin(), t.end());
  return t;
}

bool is_abelian_subgroup(const Subgroup& s) {
  for (Elem a : s.generators())
    for (Elem b : s.generators())
      if (s.parent().mul(a, b) != s.parent().mul(b, a)) return false;
  return true;
}

/// Members of H acting trivially on the points [from, to).
Bitset fixing(const FiniteGroup& h, std::size_t from, std::size_t to) {
  Bitset b(h.order());
  for (Elem e = 0; e < h.order(); ++e) {
    const auto p = h.permutation(e);
    bool fixes = true;
    for (std::size_t i = from; i < to; ++i) fixes = fixes && p[i] == i;
    if (fixes) b.set(e);
  }
  return b;
}

template <class F>
void for_each_family(std::size_t n, F&& f) {
  if (n <= kExhaustiveFamilies) {
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      std::vector<std::size_t> fam;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) fam.push_back(i);
      f(fam);
    }
    return;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b)
      for (std::size_t c = b; c < n; ++c) f(std::vector<std::size_t>{a, b, c});
}

// ---------------------------------------------------------------- scopes

Json domain_examples(const VerifyOptions& opts) {
  Tally t;
  Json details = Json::array();
  for (const CatalogTriple& c : {CatalogTriple{"sym:5", "sym:5", "identity"}, CatalogTriple{"sym:5", "sym:6", "fix-last"}}) {
    const GGroup x = build(c, opts.caps);
    const DomainCheck d = check_domain(x);
    Json r = domain_json(x, d);
    r["fixture"] = fixture_name(c);
    t.expect(d.isDomain, [&] { return r; });
    details.push_back(std::move(r));
  }
  return finish("domain-examples", t, std::move(details));
}

Json negative_domains(const VerifyOptions& opts) {
  Tally t;
  Json details = Json::array();
  const std::pair<const char*, std::vector<std::size_t>> cases[] = {{"sym:3", {3}}, {"sym:4", {2, 2}}};
  for (const auto& [name, type] : cases) {
    const GGroup x = build({name, name, "identity"}, opts.caps);
    const DomainCheck d = check_domain(x);
    Json r = domain_json(x, d);
    r["fixture"] = std::string(name) + " in " + name;
    bool ok = !d.isDomain && d.zeroDivisor && d.witness;
    if (ok) {
      const Subgroup orbit = orbit_subgroup(x, *d.zeroDivisor);
      r["orbitSubgroupAbelian"] = is_abelian_subgroup(orbit);
      // the witness must really annihilate the orbit subgroup
      const Subgroup wo = orbit_subgroup(x, *d.witness);
      bool commute = true;
      for (Elem a : orbit.generators())
        for (Elem b : wo.generators()) commute = commute && x.ambient().commutator(a, b) == kIdentity;
      ok = is_abelian_subgroup(orbit) && commute && cycle_type(x.ambient().permutation(*d.zeroDivisor)) == type &&
           cycle_type(x.ambient().permutation(*d.witness)) == type;
    }
    t.expect(ok, [&] { return r; });
    details.push_back(std::move(r));
  }
  return finish("negative-domains", t, std::move(details));
}

Json abelian_empty(const VerifyOptions& opts) {
  Tally t;
  Json details = Json::array();
  std::vector<CatalogTriple> named;
  for (const char* g : {"cyc:2", "cyc:6"})
    for (const char* k : {"cyc:4", "sym:3"}) named.push_back({g, std::string("prod:") + g + "," + k, "first-factor"});
  auto run = [&](const std::string& name, const GGroup& x) {
    const Spectrum s = spectrum(x, opts.caps);
    t.expect(s.size() == 0, [&] { return Json{{"fixture", name}, {"spectrum", spectrum_json(s)}}; });
    details.push_back({{"fixture", name}, {"normalSubgroups", s.normals.size()}, {"size", s.size()}});
  };
  for (const auto& c : named) run(fixture_name(c), build(c, opts.caps));
  for (const auto& f : sweep(opts))
    if (f.x.base().is_abelian() && f.x.base().order() > 1) run(f.name, f.x);
  return finish("abelian-empty", t, std::move(details));
}

Json one_point(const VerifyOptions& opts) {
  Tally t;
  const GGroup x = build(kOnePoint, opts.caps);
  const Spectrum s = spectrum(x, opts.caps);
  // 1 x C2: the elements moving only the last two points
  const Bitset expected = fixing(x.ambient(), 0, 5);
  t.expect(s.size() == 1 && s.points[0].subgroup.members() == expected && expected.count() == 2,
           [&] { return spectrum_json(s); });
  Json d = spectrum_json(s);
  d["fixture"] = fixture_name(kOnePoint);
  return finish("one-point", t, std::move(d));
}

Json two_point(const VerifyOptions& opts) {
  Tally t;
  const GGroup x = build(kTwoPoint, opts.caps);
  const Spectrum s = spectrum(x, opts.caps);
  const Bitset firstTrivial = fixing(x.ambient(), 0, 5);   // 1 x A5
  const Bitset secondTrivial = fixing(x.ambient(), 5, 10);  // A5 x 1
  std::set<Bitset> got;
  for (const auto& p : s.points) got.insert(p.subgroup.members());
  t.expect(s.size() == 2 && got == std::set<Bitset>{firstTrivial, secondTrivial}, [&] { return spectrum_json(s); });
  const FiniteTopology top = s.topology();
  bool discrete = true;
  for (std::size_t p = 0; p < top.pointCount; ++p) discrete = discrete && top.minOpen[p].count() == 1;
  t.expect(discrete, [&] { return topology_json(top); });
  Json d = spectrum_json(s);
  d["fixture"] = fixture_name(kTwoPoint);
  d["topology"] = topology_json(top);
  return finish("two-point", t, std::move(d));
}

Json v_identities(const VerifyOptions& opts) {
  Tally t;
  Json details = Json::array();
  for (const auto& f : sweep(opts)) {
    const Spectrum s = spectrum(f.x, opts.caps);
    const std::size_t n = s.normals.size();
    std::size_t pairs = 0, families = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        const auto k = s.normal_index(commutator_subgroup(s.normals[i], s.normals[j]));
        t.expect(k && s.vanishing[*k] == (s.vanishing[i] | s.vanishing[j]),
                 [&] { return Json{{"fixture", f.name}, {"I", subgroup_json(s.normals[i])}, {"J", subgroup_json(s.normals[j])}}; });
        ++pairs;
      }
    for_each_family(n, [&](const std::vector<std::size_t>& fam) {
      Subgroup acc = s.normals[fam[0]];
      Bitset meet = s.vanishing[fam[0]];
      for (std::size_t a = 1; a < fam.size(); ++a) {
        acc = join(acc, s.normals[fam[a]]);
        meet &= s.vanishing[fam[a]];
      }
      const auto k = s.normal_index(acc);
      t.expect(k && s.vanishing[*k] == meet, [&] {
        Json members = Json::array();
        for (auto a : fam) members.push_back(subgroup_json(s.normals[a]));
        return Json{{"fixture", f.name}, {"family", members}};
      });
      ++families;
    });
    details.push_back({{"fixture", f.name},
                       {"order", f.x.ambient().order()},
                       {"normalSubgroups", n},
                       {"points", s.size()},
                       {"pairs", pairs},
                       {"families", families},
                       {"familiesExhaustive", n <= kExhaustiveFamilies}});
  }
  return finish("v-identities", t, std::move(details));
}

Json prime_equivalence(const VerifyOptions& opts) {
  Tally t;
  Json details = Json::array();
  for (const auto& f : sweep(opts)) {
    std::size_t tested = 0, primes = 0;
    for (const auto& n : normal_subgroups(f.x.ambient(), opts.caps)) {
      if ((n.members() & f.x.image().members()).count() != 1) continue;
      const PrimeEquivalence e = prime_equivalence_check(f.x, n);
      t.expect(e.agree(), [&] {
        return Json{{"fixture", f.name}, {"P", subgroup_json(n)}, {"quotientTest", e.quotientTest}, {"commutatorTest", e.commutatorTest}};
      });
      ++tested;
      primes += e.quotientTest;
    }
    details.push_back({{"fixture", f.name}, {"candidates", tested}, {"primes", primes}});
  }
  return finish("prime-equivalence", t, std::move(details));
}

Json functoriality(const VerifyOptions& opts) {
  Tally t;
  Json details;
  {
    const FiniteGroup g = build_group("sym:5", opts.caps);
    const FiniteGroup h = build_group("prod:sym:5,cyc:2", opts.caps);
    const GGroup x(g, g, identity_morphism(g));
    const GGroup y(g, h, named_embedding(g, h, "first-factor"));
    const Morphism f = named_embedding(g, h, "first-factor");
    const Spectrum sx = spectrum(x, opts.caps), sy = spectrum(y, opts.caps);
    try {
      const InducedMap m = induced_map(sx, sy, f);
      const bool ok = sy.size() == 1 && m.pointMap.size() == 1 && sx.points[m.pointMap[0]].subgroup.is_trivial() &&
                      m.closedSetsChecked == sx.normals.size();
      t.expect(ok, [&] { return Json{{"pointMap", m.pointMap}}; });
      details["inclusion"] = {{"source", "sym:5 in sym:5"},
                              {"target", fixture_name(kOnePoint)},
                              {"pointMap", m.pointMap},
                              {"imageOfPrime", subgroup_json(sx.points[m.pointMap.at(0)].subgroup)},
                              {"closedSetsPulledBack", m.closedSetsChecked}};
    } catch (const Error& e) {
      t.expect(false, [&] { return Json{{"error", e.what()}}; });
    }
  }
  // identity maps and quotient maps H -> H/P over every fixture
  Json sweepDetails = Json::array();
  for (const auto& fx : sweep(opts)) {
    const Spectrum s = spectrum(fx.x, opts.caps);
    std::size_t maps = 0, closed = 0;
    auto certify = [&](const Spectrum& target, const Morphism& f, const std::string& what) {
      try {
        const InducedMap m = induced_map(s, target, f);
        t.expect(m.closedSetsChecked == s.normals.size(), [&] { return Json{{"fixture", fx.name}, {"map", what}}; });
        closed += m.closedSetsChecked;
      } catch (const Error& e) {
        t.expect(false, [&] { return Json{{"fixture", fx.name}, {"map", what}, {"error", e.what()}}; });
      }
      ++maps;
    };
    certify(s, identity_morphism(fx.x.ambient()), "identity");
    for (std::size_t p = 0; p < s.size(); ++p) {
      const GGroup q = quotient_ggroup(fx.x, s.points[p].quotient);
      certify(spectrum(q, opts.caps), s.points[p].quotient.projection, "quotient by point " + std::to_string(p));
    }
    sweepDetails.push_back({{"fixture", fx.name}, {"maps", maps}, {"closedSetsPulledBack", closed}});
  }
  details["sweep"] = std::move(sweepDetails);
  return finish("functoriality", t, std::move(details));
}

Json normalizer_scope(const VerifyOptions& opts) {
  Tally t;
  const GGroup x = build({"sym:5", "sym:6", "fix-last"}, opts.caps);
  const Subgroup n = normalizer(x.ambient(), x.image());
  const bool complete = is_complete(x.base(), opts.caps);
  t.expect(n == x.image(), [&] { return Json{{"normalizer", subgroup_json(n)}}; });
  t.expect(complete, [&] { return Json{{"isComplete", complete}}; });
  t.expect(is_domain(x), [&] { return Json{{"isDomain", false}}; });
  Json d{{"fixture", "sym:5 in sym:6 (fix-last)"},
         {"normalizerOrder", n.order()},
         {"imageOrder", x.image().order()},
         {"baseComplete", complete}};
  return finish("normalizer", t, std::move(d));
}

// Counts compatible families over a cover and checks that each glues to a
// section restricting back to it; together with injectivity of restriction
// this is the sheaf condition for the cover.
struct CoverResult {
  std::size_t compatible = 0;
  bool glueOk = true;
};

CoverResult check_cover(const PointSpace& x, const Bitset& u, const std::vector<Bitset>& cover,
                        std::map<Bitset, std::vector<LSection>>& cache, const Caps& caps) {
  auto sections = [&](const Bitset& v) -> const std::vector<LSection>& {
    auto it = cache.find(v);
    if (it == cache.end()) it = cache.emplace(v, l_sections(x, v, caps)).first;
    return it->second;
  };
  const std::size_t k = cover.size();
  std::vector<Bitset> seen(k, Bitset(x.size()));
  for (std::size_t i = 1; i < k; ++i) seen[i] = seen[i - 1] | cover[i - 1];
  std::vector<std::map<std::vector<Elem>, std::vector<const LSection*>>> byOverlap(k);
  for (std::size_t i = 0; i < k; ++i)
    for (const auto& s : sections(cover[i])) byOverlap[i][restrict(x, s, cover[i] & seen[i]).values].push_back(&s);

  CoverResult r;
  std::vector<const LSection*> chosen(k, nullptr);
  std::vector<Elem> partial(x.size(), 0);
  std::function<void(std::size_t)> dfs = [&](std::size_t i) {
    if (i == k) {
      ++r.compatible;
      std::vector<LSection> fam;
      for (auto* s : chosen) fam.push_back(*s);
      const LSection g = glue(x, fam);
      bool ok = g.domain == u && is_l_section(x, u, g.values);
      for (const auto* s : chosen) ok = ok && restrict(x, g, s->domain) == *s;
      r.glueOk = r.glueOk && ok;
      return;
    }
    std::vector<Elem> key(x.size(), 0);
    for (std::size_t p : (cover[i] & seen[i]).members()) key[p] = partial[p];
    auto it = byOverlap[i].find(key);
    if (it == byOverlap[i].end()) return;
    for (const LSection* s : it->second) {
      const std::vector<Elem> saved = partial;
      for (std::size_t p : cover[i].members()) partial[p] = s->values[p];
      chosen[i] = s;
      dfs(i + 1);
      partial = saved;
    }
  };
  dfs(0);
  return r;
}

Json sheaf_axioms_space(const std::string& name, const PointSpace& x, const Caps& caps, Tally& t) {
  std::map<Bitset, std::vector<LSection>> cache;
  const auto opens = x.topology.open_sets();
  std::size_t covers = 0;
  Json perOpen = Json::array();
  for (const auto& u : opens) {
    std::vector<Bitset> inside;
    for (const auto& v : opens)
      if (v.is_subset_of(u)) inside.push_back(v);
    if (!cache.count(u)) cache.emplace(u, l_sections(x, u, caps));
    const std::size_t total = cache.at(u).size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << inside.size()); ++mask) {
      std::vector<Bitset> cover;
      Bitset uni(x.size());
      for (std::size_t i = 0; i < inside.size(); ++i)
        if (mask >> i & 1) cover.push_back(inside[i]), uni |= inside[i];
      if (!(uni == u)) continue;
      std::sort(cover.begin(), cover.end(), [](const Bitset& a, const Bitset& b) { return a.count() > b.count(); });
      const auto res = check_cover(x, u, cover, cache, caps);
      // identity: restriction to the cover is injective on sections over u
      std::set<std::vector<std::vector<Elem>>> images;
      for (const auto& s : cache.at(u)) {
        std::vector<std::vector<Elem>> img;
        for (const auto& c : cover) img.push_back(restrict(x, s, c).values);
        images.insert(std::move(img));
      }
      t.expect(images.size() == total, [&] {
        return Json{{"space", name}, {"open", bitset_json(u)}, {"axiom", "identity"}};
      });
      t.expect(res.compatible == total && res.glueOk, [&] {
        return Json{{"space", name}, {"open", bitset_json(u)}, {"axiom", "gluing"}, {"compatible", res.compatible}, {"sections", total}};
      });
      ++covers;
    }
    perOpen.push_back({{"open", bitset_json(u)}, {"sections", total}});
  }
  return {{"space", name}, {"points", x.size()}, {"opens", opens.size()}, {"covers", covers}, {"sections", perOpen}};
}

Json a_spec_brute_force(Tally& t) {
  // D4 with its proper nontrivial normals as points; R = Z/2
  const FiniteGroup d4 = build_group("dih:4");
  std::vector<Subgroup> pts;
  for (const auto& n : normal_subgroups(d4))
    if (!n.is_trivial() && n.order() != d4.order()) pts.push_back(n);
  const PointSpace d = containment_space(d4, pts);
  const Coeff two{2};
  std::vector<RingElement> ring;
  for (unsigned mask = 0; mask < (1u << d4.order()); ++mask) {
    RingElement r{two, {}};
    for (Elem h = 0; h < d4.order(); ++h)
      if (mask >> h & 1) r = ring_add(r, ring_basis(two, h));
    ring.push_back(r);
  }
  auto to_elem = [&](std::size_t p, unsigned mask) {
    RingElement r{two, {}};
    for (Elem c = 0; c < d.quotients[p].group.order(); ++c)
      if (mask >> c & 1) r = ring_add(r, ring_basis(two, c));
    return r;
  };
  std::size_t families = 0, fullMembers = 0;
  for (const auto& u : d.topology.open_sets()) {
    const auto members = u.members();
    std::size_t total = 1;
    for (auto p : members) total <<= d.quotients[p].group.order();
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<RingElement> values(d.size(), RingElement{two, {}});
      std::size_t rest = code;
      for (auto p : members) {
        const std::size_t n = d.quotients[p].group.order();
        values[p] = to_elem(p, static_cast<unsigned>(rest & ((1u << n) - 1)));
        rest >>= n;
      }
      bool brute = true;
      for (auto p : members) {
        const auto germ = (d.topology.minOpen[p] & u).members();
        bool ok = false;
        for (const auto& r : ring) {
          bool all = true;
          for (auto q : germ) all = all && ring_project(d.quotients[q].projection, r) == values[q];
          if (all) {
            ok = true;
            break;
          }
        }
        brute = brute && ok;
      }
      const bool got = is_a_section(d, two, u, values);
      t.expect(got == brute, [&] { return Json{{"open", bitset_json(u)}, {"code", code}, {"brute", brute}}; });
      ++families;
      if (u.count() == d.size()) fullMembers += got;
    }
  }
  return {{"space", "dih:4, proper nontrivial normal subgroups"},
          {"coefficients", two.name()},
          {"familiesChecked", families},
          {"sectionsOverWholeSpace", fullMembers}};
}

Json sheaf_axioms(const VerifyOptions& opts) {
  Tally t;
  Json details = Json::array();
  const Spectrum s4 = spectrum(build(kOnePoint, opts.caps), opts.caps);
  const Spectrum s5 = spectrum(build(kTwoPoint, opts.caps), opts.caps);
  const PointSpace x4 = point_space(s4), x5 = point_space(s5);
  details.push_back(sheaf_axioms_space(fixture_name(kOnePoint), x4, opts.caps, t));
  details.push_back(sheaf_axioms_space(fixture_name(kTwoPoint), x5, opts.caps, t));
  const std::size_t full = l_sections(x5, Bitset::full(x5.size()), opts.caps).size();
  t.expect(full == 3600, [&] { return Json{{"sectionsOverFullSpace", full}}; });
  details.push_back(a_spec_brute_force(t));
  return finish("sheaf-axioms", t, Json{{"spaces", details}, {"twoPointFullSections", full}});
}

template <class S>
Json lie_fixture(const std::string& name, const lie::SLie<S>& x, const Caps& caps, Tally& t) {
  using namespace lie;
  const LieSpectrum<S> sp = spec_lie(x, caps);
  const auto& is = sp.ideals;
  std::size_t pairs = 0, families = 0, maps = 0;
  for (std::size_t a = 0; a < is.size(); ++a)
    for (std::size_t b = a; b < is.size(); ++b) {
      const Subspace<S> br = bracket_subspace(x.ambient(), is[a], is[b]);
      const auto k = sp.ideal_index(br);
      const bool ok = k && sp.vanishing[*k] == (sp.vanishing[a] | sp.vanishing[b]);
      t.expect(ok, [&] {
        Json j{{"fixture", name}, {"identity", "V([I,J]) = V(I) u V(J)"}, {"I", subspace_json(is[a])}, {"J", subspace_json(is[b])}};
        if (k) {
          Json extra = Json::array();
          for (auto p : (sp.vanishing[*k] - (sp.vanishing[a] | sp.vanishing[b])).members()) {
            const Subspace<S> ps = sum(sp.point(p), x.image());
            extra.push_back({{"P", subspace_json(sp.point(p))},
                             {"IinsidePplusImage", is[a].is_subspace_of(ps)},
                             {"JinsidePplusImage", is[b].is_subspace_of(ps)}});
          }
          j["pointsOnlyInLeftSide"] = std::move(extra);
        }
        return j;
      });
      ++pairs;
    }
  for_each_family(is.size(), [&](const std::vector<std::size_t>& fam) {
    Subspace<S> acc = is[fam[0]];
    Bitset meet = sp.vanishing[fam[0]];
    for (std::size_t i = 1; i < fam.size(); ++i) {
      acc = sum(acc, is[fam[i]]);
      meet &= sp.vanishing[fam[i]];
    }
    const auto k = sp.ideal_index(acc);
    t.expect(k && sp.vanishing[*k] == meet, [&] { return Json{{"fixture", name}, {"identity", "family"}}; });
    ++families;
  });
  auto certify = [&](const SLie<S>& y, const Matrix<S>& f, const std::string& what) {
    try {
      const auto sy = spec_lie(y, caps);
      const auto m = induced_map_lie(x, sp, y, sy, f);
      t.expect(m.closedSetsChecked == is.size(), [&] { return Json{{"fixture", name}, {"map", what}}; });
    } catch (const Error& e) {
      t.expect(false, [&] { return Json{{"fixture", name}, {"map", what}, {"error", e.what()}}; });
    }
    ++maps;
  };
  certify(x, Matrix<S>::Identity(x.ambient().dim(), x.ambient().dim()), "identity");
  for (const auto& i : is) {
    if (!intersection(i, x.image()).is_zero()) continue;
    const auto q = quotient(x.ambient(), i);
    certify(quotient_slie(x, q), q.projection, "quotient by an ideal of dim " + std::to_string(i.dim()));
  }
  return {{"fixture", name},
          {"field", FieldTraits<S>::name()},
          {"ideals", is.size()},
          {"points", sp.size()},
          {"pairs", pairs},
          {"families", families},
          {"familiesExhaustive", is.size() <= kExhaustiveFamilies},
          {"mapsCertified", maps}};
}

Json lie_spectrum_scope(const VerifyOptions& opts) {
  using namespace lie;
  Tally t;
  Json details;
  using F5 = Zp<5>;
  using F3 = Zp<3>;
  const auto sl2n = parse_lie_name("lie:sl2@5"), gl2n = parse_lie_name("lie:gl2@5");
  const SLie<F5> x(build_lie<F5>(sl2n), build_lie<F5>(gl2n), lie_embedding<F5>(sl2n, gl2n, "canonical"));
  const auto sp = spec_lie(x, opts.caps);
  Vector<F5> id = Vector<F5>::Zero(4);
  id(0) = F5(1), id(3) = F5(1);
  t.expect(sp.size() == 1 && sp.point(0) == Subspace<F5>::of(id), [&] { return lie_spectrum_json(x, sp); });
  details["sl2InGl2"] = lie_spectrum_json(x, sp);
  {
    // inclusion sl2 -> gl2 over S = sl2 sends the center to 0
    const SLie<F5> base(x.base(), x.base(), Matrix<F5>::Identity(3, 3));
    const auto sb = spec_lie(base, opts.caps);
    try {
      const auto m = induced_map_lie(base, sb, x, sp, x.phi());
      t.expect(m.pointMap.size() == 1 && sb.point(m.pointMap[0]).is_zero(), [&] { return Json{{"map", "sl2 -> gl2"}}; });
      details["inclusionPointMap"] = m.pointMap;
    } catch (const Error& e) {
      t.expect(false, [&] { return Json{{"map", "sl2 -> gl2"}, {"error", e.what()}}; });
    }
  }
  Json fixtures = Json::array();
  fixtures.push_back(lie_fixture("lie:sl2@5 in lie:gl2@5 (canonical)", x, opts.caps, t));
  {
    const auto a = parse_lie_name("lie:abelian:1@3"), h = parse_lie_name("lie:heis@3");
    fixtures.push_back(lie_fixture("lie:abelian:1@3 in lie:heis@3 (canonical)",
                                   SLie<F3>(build_lie<F3>(a), build_lie<F3>(h), lie_embedding<F3>(a, h, "canonical")),
                                   opts.caps, t));
  }
  {
    const auto a = parse_lie_name("lie:abelian:1@3"), g = parse_lie_name("lie:abelian:3@3");
    fixtures.push_back(lie_fixture("lie:abelian:1@3 in lie:abelian:3@3 (canonical)",
                                   SLie<F3>(build_lie<F3>(a), build_lie<F3>(g), lie_embedding<F3>(a, g, "canonical")),
                                   opts.caps, t));
  }
  details["lattices"] = std::move(fixtures);
  return finish("lie-spectrum", t, std::move(details));
}

Json equations_scope(const VerifyOptions& opts) {
  Tally t;
  const FiniteGroup g = build_group("sym:4", opts.caps);
  Json details = Json::array();
  for (Elem x = 0; x < g.order(); ++x) {
    std::vector<Elem> c;
    for (Elem y = 0; y < g.order(); ++y)
      if (g.mul(x, y) == g.mul(y, x)) c.push_back(y);
    for (std::size_t n = 0; n <= 2; ++n) {
      const SolutionSet s = solutions(commutation_system(g, x, n), g, n, opts.caps);
      std::size_t expected = 1;
      for (std::size_t i = 0; i < n; ++i) expected *= c.size();
      bool ok = s.size() == expected;
      for (std::size_t k = 0; k < s.size() && ok; ++k)
        for (Elem e : s.tuple(k)) ok = ok && std::binary_search(c.begin(), c.end(), e);
      t.expect(ok, [&] { return Json{{"g", element_json(g, x)}, {"n", n}, {"solutions", s.size()}, {"expected", expected}}; });
      if (n == 2) details.push_back({{"g", element_json(g, x)}, {"centralizerOrder", c.size()}, {"solutionsN2", s.size()}});
    }
  }
  return finish("equations", t, Json{{"group", "sym:4"}, {"elements", details}});
}

Json absolute_spectrum_scope(const VerifyOptions& opts) {
  Tally t;
  const Spectrum a5 = absolute_spectrum(build_group("alt:5", opts.caps), opts.caps);
  const Spectrum c6 = absolute_spectrum(build_group("cyc:6", opts.caps), opts.caps);
  t.expect(a5.size() == 1 && a5.points[0].subgroup.is_trivial(), [&] { return spectrum_json(a5); });
  t.expect(c6.size() == 0, [&] { return spectrum_json(c6); });
  return finish("absolute-spectrum", t, Json{{"alt:5", spectrum_json(a5)}, {"cyc:6", spectrum_json(c6)}});
}

}  // namespace

const std::vector<ScopeInfo>& verify_scopes() {
  static const std::vector<ScopeInfo> scopes = {
      {"domain-examples", 1, "sym:5 over itself and inside sym:6 are domains"},
      {"negative-domains", 2, "sym:3 and sym:4 over themselves have abelian-orbit zero divisors"},
      {"abelian-empty", 3, "abelian base groups give empty spectra"},
      {"one-point", 4, "Spec(sym:5 in sym:5 x C2) = {1 x C2}"},
      {"two-point", 5, "Spec(alt:5 diagonal in alt:5 x alt:5) is discrete with two points"},
      {"v-identities", 6, "commutator and family identities for vanishing sets"},
      {"prime-equivalence", 7, "quotient-domain test agrees with the commutator test"},
      {"functoriality", 8, "induced maps send primes to primes and are continuous"},
      {"normalizer", 9, "a complete base is self-normalizing in a domain"},
      {"sheaf-axioms", 10, "identity and gluing for L_Spec; A_Spec membership by brute force"},
      {"lie-spectrum", 11, "Lie spectra, vanishing identities and induced maps"},
      {"equations", 12, "commutation systems cut out centralizer powers"},
      {"absolute-spectrum", 13, "absolute spectra of alt:5 and cyc:6"},
      {"determinism", 14, "reports are byte-identical across runs"},
  };
  return scopes;
}

const ScopeInfo* find_scope(const std::string& name) {
  for (const auto& s : verify_scopes())
    if (s.name == name) return &s;
  return nullptr;
}

const std::vector<CatalogTriple>& catalog_ggroups() {
  static const std::vector<CatalogTriple> triples = [] {
    std::vector<CatalogTriple> v;
    for (const char* g : {"cyc:2", "cyc:3", "cyc:4", "cyc:6", "sym:3", "sym:4", "sym:5", "alt:4", "alt:5", "dih:3", "dih:4",
                          "dih:5", "dih:6", "q8", "prod:cyc:2,cyc:2"})
      v.push_back({g, g, "identity"});
    const std::pair<const char*, const char*> products[] = {
        {"cyc:2", "cyc:4"}, {"cyc:2", "sym:3"}, {"cyc:6", "cyc:4"}, {"cyc:6", "sym:3"}, {"sym:3", "cyc:2"},
        {"sym:3", "sym:3"}, {"sym:4", "cyc:2"}, {"alt:4", "cyc:3"}, {"dih:4", "cyc:2"}, {"q8", "cyc:3"},
        {"sym:5", "cyc:2"}, {"alt:5", "cyc:2"}, {"alt:5", "cyc:4"}};
    for (const auto& [g, k] : products) v.push_back({g, std::string("prod:") + g + "," + k, "first-factor"});
    for (const auto& [g, h] : {std::pair{"sym:3", "sym:4"}, std::pair{"sym:4", "sym:5"}, std::pair{"sym:5", "sym:6"}})
      v.push_back({g, h, "fix-last"});
    for (const char* g : {"cyc:3", "sym:3", "alt:4", "sym:4"}) v.push_back({g, std::string("prod:") + g + "," + g, "diagonal"});
    return v;
  }();
  return triples;
}

Json verify_scope(const std::string& name, const VerifyOptions& opts) {
  if (name == "domain-examples") return domain_examples(opts);
  if (name == "negative-domains") return negative_domains(opts);
  if (name == "abelian-empty") return abelian_empty(opts);
  if (name == "one-point") return one_point(opts);
  if (name == "two-point") return two_point(opts);
  if (name == "v-identities") return v_identities(opts);
  if (name == "prime-equivalence") return prime_equivalence(opts);
  if (name == "functoriality") return functoriality(opts);
  if (name == "normalizer") return normalizer_scope(opts);
  if (name == "sheaf-axioms") return sheaf_axioms(opts);
  if (name == "lie-spectrum") return lie_spectrum_scope(opts);
  if (name == "equations") return equations_scope(opts);
  if (name == "absolute-spectrum") return absolute_spectrum_scope(opts);
  if (name == "determinism") return verify_determinism(opts);
  throw InputError("unknown verify scope '" + name + "'");
}

Json verify_determinism(const VerifyOptions& opts, const std::map<std::string, std::string>& firstRun) {
  Tally t;
  Json details = Json::array();
  for (const auto& s : verify_scopes()) {
    if (s.name == "determinism") continue;
    auto it = firstRun.find(s.name);
    const std::string a = it != firstRun.end() ? it->second : verify_scope(s.name, opts).dump();
    const std::string b = verify_scope(s.name, opts).dump();
    t.expect(a == b, [&] { return Json{{"scope", s.name}}; });
    details.push_back({{"scope", s.name}, {"bytes", b.size()}, {"identical", a == b}});
  }
  return finish("determinism", t, std::move(details));
}

}  // namespace groupspec
