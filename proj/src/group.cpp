#include "groupspec/group.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <random>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "groupspec/error.hpp"

namespace groupspec {

namespace {

constexpr std::size_t kMaxTableOrder = std::numeric_limits<std::uint16_t>::max();

struct PermHash {
  std::size_t operator()(const Permutation& p) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto v : p) {
      h ^= v;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

void check_order_cap(std::size_t order, const Caps& caps) {
  if (order > caps.maxGroupOrder)
    throw CapExceeded("group order exceeds cap " + std::to_string(caps.maxGroupOrder));
  if (order > kMaxTableOrder) throw CapExceeded("group order exceeds table limit 65535");
}

// Closure of gens as a member set, by right multiplication from the identity.
Bitset close(const FiniteGroup& g, std::span<const Elem> gens) {
  Bitset members(g.order());
  members.set(kIdentity);
  std::vector<Elem> queue{kIdentity};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Elem e = queue[i];
    for (Elem s : gens) {
      const Elem y = g.mul(e, s);
      if (!members.test(y)) {
        members.set(y);
        queue.push_back(y);
      }
    }
  }
  return members;
}

// Breadth-first spanning tree of g over its generators: order of visit,
// parent and the generator index leading to each element.
struct SpanningTree {
  std::vector<Elem> order;
  std::vector<Elem> parent;
  std::vector<std::uint32_t> via;
};

SpanningTree spanning_tree(const FiniteGroup& g) {
  const auto gens = g.generators();
  SpanningTree t;
  t.parent.assign(g.order(), kIdentity);
  t.via.assign(g.order(), 0);
  Bitset seen(g.order());
  seen.set(kIdentity);
  t.order.push_back(kIdentity);
  for (std::size_t i = 0; i < t.order.size(); ++i) {
    const Elem e = t.order[i];
    for (std::uint32_t j = 0; j < gens.size(); ++j) {
      const Elem y = g.mul(e, gens[j]);
      if (!seen.test(y)) {
        seen.set(y);
        t.parent[y] = e;
        t.via[y] = j;
        t.order.push_back(y);
      }
    }
  }
  if (t.order.size() != g.order()) throw InvariantViolation("generators do not generate " + g.label());
  return t;
}

// Extends generator images along the tree and checks f(x s) = f(x) f(s) for
// every element x and generator s. That check implies the full homomorphism
// property by induction on word length.
std::optional<std::vector<Elem>> extend(const FiniteGroup& g, const FiniteGroup& h, const SpanningTree& tree,
                                        std::span<const Elem> genImages) {
  const auto gens = g.generators();
  std::vector<Elem> img(g.order(), kIdentity);
  for (std::size_t i = 1; i < tree.order.size(); ++i) {
    const Elem x = tree.order[i];
    img[x] = h.mul(img[tree.parent[x]], genImages[tree.via[x]]);
  }
  for (Elem x = 0; x < g.order(); ++x)
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (img[g.mul(x, gens[j])] != h.mul(img[x], genImages[j])) return std::nullopt;
  return img;
}

std::vector<Elem> greedy_generators(const FiniteGroup& g, const Bitset& members) {
  std::vector<Elem> gens;
  Bitset reached(g.order());
  reached.set(kIdentity);
  members.for_each([&](std::size_t x) {
    if (!reached.test(x)) {
      gens.push_back(static_cast<Elem>(x));
      reached = close(g, gens);
    }
  });
  return gens;
}

}  // namespace

// ---------------------------------------------------------------- cycles

Permutation parse_cycles(const std::string& text, std::size_t degree) {
  Permutation p(degree);
  for (std::size_t i = 0; i < degree; ++i) p[i] = static_cast<std::uint32_t>(i);
  std::vector<bool> used(degree, false);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
      ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') throw InputError("bad cycle notation: " + text);
    ++pos;
    std::vector<std::uint32_t> cycle;
    while (true) {
      skip_space();
      if (pos >= text.size()) throw InputError("unterminated cycle: " + text);
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t end = pos;
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
      if (end == pos) throw InputError("bad cycle notation: " + text);
      const auto point = std::stoul(text.substr(pos, end - pos));
      pos = end;
      if (point >= degree) throw InputError("cycle point out of range: " + text);
      if (used[point]) throw InputError("repeated point in cycles: " + text);
      used[point] = true;
      cycle.push_back(static_cast<std::uint32_t>(point));
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) p[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_space();
  }
  return p;
}

std::string format_cycles(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += '(';
    std::size_t j = i;
    bool firstPoint = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!firstPoint) out += ' ';
      out += std::to_string(j);
      firstPoint = false;
      j = p[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

// ---------------------------------------------------------------- FiniteGroup

FiniteGroup::FiniteGroup() {
  auto impl = std::make_shared<Impl>();
  impl->table = {0};
  impl->inverse = {0};
  impl->label = "trivial";
  impl_ = std::move(impl);
  order_ = 1;
}

FiniteGroup::FiniteGroup(std::shared_ptr<const Impl> impl, std::size_t order)
    : impl_(std::move(impl)), order_(order) {}

FiniteGroup FiniteGroup::from_permutations(std::size_t degree, std::span<const Permutation> generators,
                                           const Caps& caps, std::string label) {
  if (degree == 0) throw InputError("permutation degree must be positive");
  for (const auto& g : generators) {
    if (g.size() != degree) throw InputError("generator length does not match degree");
    std::vector<bool> hit(degree, false);
    for (auto v : g) {
      if (v >= degree || hit[v]) throw InputError("generator is not a permutation");
      hit[v] = true;
    }
  }

  Permutation id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<std::uint32_t>(i);

  std::vector<Permutation> gens(generators.begin(), generators.end());
  const std::size_t k = gens.size();

  std::unordered_map<Permutation, Elem, PermHash> index;
  std::vector<Permutation> elems{id};
  index.emplace(id, kIdentity);
  std::vector<Elem> parent{kIdentity};
  std::vector<std::uint32_t> via{0};
  std::vector<Elem> rmul;  // rmul[e * k + j] = e * gens[j]

  Permutation prod(degree);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const Permutation& e = elems[i];
      for (std::size_t pt = 0; pt < degree; ++pt) prod[pt] = e[gens[j][pt]];
      auto [it, inserted] = index.emplace(prod, static_cast<Elem>(elems.size()));
      if (inserted) {
        check_order_cap(elems.size() + 1, caps);
        elems.push_back(prod);
        parent.push_back(static_cast<Elem>(i));
        via.push_back(static_cast<std::uint32_t>(j));
      }
      rmul.push_back(it->second);
    }
  }

  const std::size_t n = elems.size();
  auto impl = std::make_shared<Impl>();
  impl->table.resize(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    std::uint16_t* row = impl->table.data() + x * n;
    row[0] = static_cast<std::uint16_t>(x);
    for (std::size_t y = 1; y < n; ++y) row[y] = static_cast<std::uint16_t>(rmul[row[parent[y]] * k + via[y]]);
  }
  impl->inverse.resize(n);
  Permutation inv(degree);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t pt = 0; pt < degree; ++pt) inv[elems[x][pt]] = static_cast<std::uint32_t>(pt);
    impl->inverse[x] = index.at(inv);
  }
  for (const auto& g : gens) {
    const Elem e = index.at(g);
    if (e != kIdentity && std::find(impl->generators.begin(), impl->generators.end(), e) == impl->generators.end())
      impl->generators.push_back(e);
  }
  impl->degree = degree;
  impl->permBacked = true;
  impl->points.reserve(n * degree);
  for (const auto& e : elems) impl->points.insert(impl->points.end(), e.begin(), e.end());
  impl->label = std::move(label);
  return FiniteGroup(std::move(impl), n);
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<Elem>>& mul, const Caps& caps, std::string label) {
  const std::size_t n = mul.size();
  if (n == 0) throw InputError("multiplication table is empty");
  check_order_cap(n, caps);
  std::vector<std::uint16_t> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    if (mul[x].size() != n) throw InputError("multiplication table is not square");
    std::vector<bool> hit(n, false);
    for (std::size_t y = 0; y < n; ++y) {
      const Elem v = mul[x][y];
      if (v >= n) throw InputError("multiplication table entry out of range");
      if (hit[v]) throw InputError("multiplication table row is not a permutation");
      hit[v] = true;
      table[x * n + y] = static_cast<std::uint16_t>(v);
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    if (table[x] != x || table[x * n] != x) throw InputError("element 0 is not the identity");
  std::vector<Elem> inverse(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t y = 0;
    while (table[x * n + y] != 0) ++y;
    if (table[y * n + x] != 0) throw InputError("table has no two-sided inverses");
    inverse[x] = static_cast<Elem>(y);
  }
  auto impl = std::make_shared<Impl>();
  impl->table = std::move(table);
  impl->inverse = std::move(inverse);
  impl->label = std::move(label);
  FiniteGroup g(impl, n);
  if (!check_associativity(g, caps)) throw InputError("multiplication table is not associative");
  impl->generators = greedy_generators(g, Bitset::full(n));
  return g;
}

FiniteGroup FiniteGroup::from_trusted_table(std::size_t order, std::vector<std::uint16_t> table,
                                            std::vector<Elem> generators, std::string label) {
  auto impl = std::make_shared<Impl>();
  impl->table = std::move(table);
  impl->inverse.resize(order);
  for (std::size_t x = 0; x < order; ++x) {
    std::size_t y = 0;
    while (impl->table[x * order + y] != 0) ++y;
    impl->inverse[x] = static_cast<Elem>(y);
  }
  std::vector<Elem> gens;
  for (Elem g : generators)
    if (g != kIdentity && std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  impl->generators = std::move(gens);
  impl->label = std::move(label);
  return FiniteGroup(std::move(impl), order);
}

std::uint32_t FiniteGroup::element_order(Elem x) const {
  std::uint32_t k = 1;
  for (Elem y = x; y != kIdentity; y = mul(y, x)) ++k;
  return k;
}

Permutation FiniteGroup::permutation(Elem x) const {
  if (!impl_->permBacked) throw InputError("group " + label() + " is not permutation-backed");
  const auto* p = impl_->points.data() + static_cast<std::size_t>(x) * impl_->degree;
  return Permutation(p, p + impl_->degree);
}

std::optional<Elem> FiniteGroup::find(const Permutation& p) const {
  if (!impl_->permBacked || p.size() != impl_->degree) return std::nullopt;
  const std::size_t d = impl_->degree;
  for (std::size_t x = 0; x < order_; ++x)
    if (std::equal(p.begin(), p.end(), impl_->points.begin() + static_cast<std::ptrdiff_t>(x * d)))
      return static_cast<Elem>(x);
  return std::nullopt;
}

bool FiniteGroup::is_abelian() const {
  const auto gens = generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (mul(gens[i], gens[j]) != mul(gens[j], gens[i])) return false;
  return true;
}

// ---------------------------------------------------------------- Subgroup

Subgroup::Subgroup(FiniteGroup parent, Bitset members, std::vector<Elem> generators)
    : parent_(std::move(parent)),
      members_(std::move(members)),
      generators_(std::move(generators)),
      order_(members_.count()) {}

std::vector<Elem> Subgroup::elements() const {
  std::vector<Elem> out;
  out.reserve(order_);
  members_.for_each([&](std::size_t x) { out.push_back(static_cast<Elem>(x)); });
  return out;
}

Subgroup trivial_subgroup(const FiniteGroup& g) {
  Bitset m(g.order());
  m.set(kIdentity);
  return Subgroup(g, std::move(m), {});
}

Subgroup whole_group(const FiniteGroup& g) {
  auto gens = g.generators();
  return Subgroup(g, Bitset::full(g.order()), std::vector<Elem>(gens.begin(), gens.end()));
}

Subgroup subgroup_closure(const FiniteGroup& g, std::span<const Elem> seed) {
  std::vector<Elem> gens;
  Bitset members(g.order());
  members.set(kIdentity);
  for (Elem x : seed) {
    if (x >= g.order()) throw InputError("element id out of range");
    if (!members.test(x)) {
      gens.push_back(x);
      members = close(g, gens);
    }
  }
  return Subgroup(g, std::move(members), std::move(gens));
}

Subgroup subgroup_from_members(const FiniteGroup& g, const Bitset& members) {
  return Subgroup(g, members, greedy_generators(g, members));
}

Subgroup normal_closure(const FiniteGroup& h, const Subgroup& k, std::span<const Elem> seed) {
  if (!k.parent().same(h)) throw InputError("normal_closure: K is not a subgroup of H");
  Subgroup s = subgroup_closure(h, seed);
  std::vector<Elem> gens(s.generators().begin(), s.generators().end());
  Bitset members = s.members();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (Elem c : k.generators()) {
      const Elem y = h.conj(c, gens[i]);
      if (!members.test(y)) {
        gens.push_back(y);
        members = close(h, gens);
      }
    }
  }
  return Subgroup(h, std::move(members), std::move(gens));
}

Subgroup normal_closure(const Subgroup& k, std::span<const Elem> seed) {
  return normal_closure(k.parent(), k, seed);
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  std::vector<Elem> seed(a.generators().begin(), a.generators().end());
  seed.insert(seed.end(), b.generators().begin(), b.generators().end());
  return subgroup_closure(a.parent(), seed);
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  return subgroup_from_members(a.parent(), a.members() & b.members());
}

Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b) {
  const FiniteGroup& h = a.parent();
  if (!b.parent().same(h)) throw InputError("commutator_subgroup: subgroups of different groups");
  // [A,B] is the normal closure, inside <A,B>, of the commutators of the
  // generators: it is normalized by A and B, and modulo it the generating
  // sets commute elementwise.
  std::vector<Elem> comms;
  for (Elem x : a.generators())
    for (Elem y : b.generators()) {
      const Elem c = h.commutator(x, y);
      if (c != kIdentity) comms.push_back(c);
    }
  if (comms.empty()) return trivial_subgroup(h);
  return normal_closure(h, join(a, b), comms);
}

std::vector<std::vector<Elem>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<std::vector<Elem>> classes;
  Bitset assigned(g.order());
  const auto gens = g.generators();
  for (Elem x = 0; x < g.order(); ++x) {
    if (assigned.test(x)) continue;
    std::vector<Elem> orbit{x};
    assigned.set(x);
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (Elem s : gens) {
        const Elem y = g.conj(s, orbit[i]);
        if (!assigned.test(y)) {
          assigned.set(y);
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(std::move(orbit));
  }
  return classes;
}

bool is_normalized_by(const Subgroup& n, const Subgroup& k) {
  const FiniteGroup& h = n.parent();
  for (Elem c : k.generators())
    for (Elem x : n.generators())
      if (!n.contains(h.conj(c, x))) return false;
  return true;
}

bool is_normal(const Subgroup& n) { return is_normalized_by(n, whole_group(n.parent())); }

std::vector<Subgroup> normal_subgroups(const FiniteGroup& h, const Caps& caps) {
  const auto classes = conjugacy_classes(h);
  if (classes.size() > caps.maxClasses)
    throw CapExceeded("conjugacy class count " + std::to_string(classes.size()) + " exceeds cap " +
                      std::to_string(caps.maxClasses));
  const Subgroup all = whole_group(h);

  // Normal closures of single classes; every normal subgroup is the join of
  // the atoms of the classes it contains.
  std::vector<Subgroup> atoms;
  std::unordered_set<Bitset, BitsetHash> atomSeen;
  for (std::size_t i = 1; i < classes.size(); ++i) {
    const Elem rep = classes[i].front();
    Subgroup a = normal_closure(h, all, std::span<const Elem>(&rep, 1));
    if (atomSeen.insert(a.members()).second) atoms.push_back(std::move(a));
  }

  std::vector<Subgroup> found{trivial_subgroup(h)};
  std::unordered_set<Bitset, BitsetHash> seen{found.front().members()};
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& a : atoms) {
      if (a.is_subgroup_of(found[i])) continue;
      Subgroup j = join(found[i], a);
      if (seen.insert(j.members()).second) found.push_back(std::move(j));
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

Quotient quotient(const Subgroup& n) {
  const FiniteGroup& h = n.parent();
  if (!is_normal(n)) throw InputError("quotient: subgroup is not normal");
  constexpr Elem kUnset = std::numeric_limits<Elem>::max();
  std::vector<Elem> coset(h.order(), kUnset);
  std::vector<Elem> reps;
  const auto nMembers = n.elements();
  for (Elem x = 0; x < h.order(); ++x) {
    if (coset[x] != kUnset) continue;
    const Elem id = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem m : nMembers) coset[h.mul(x, m)] = id;
  }
  const std::size_t k = reps.size();
  std::vector<std::uint16_t> table(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) table[a * k + b] = static_cast<std::uint16_t>(coset[h.mul(reps[a], reps[b])]);
  std::vector<Elem> gens;
  for (Elem s : h.generators()) gens.push_back(coset[s]);
  FiniteGroup q = FiniteGroup::from_trusted_table(k, std::move(table), std::move(gens),
                                                  h.label() + "/N" + std::to_string(n.order()));
  return Quotient{q, Morphism(h, q, std::move(coset))};
}

// ---------------------------------------------------------------- Morphism

Morphism::Morphism(FiniteGroup source, FiniteGroup target, std::vector<Elem> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_.order()) throw InputError("morphism image table has wrong size");
}

Subgroup Morphism::kernel() const {
  Bitset m(source_.order());
  for (Elem x = 0; x < source_.order(); ++x)
    if (images_[x] == kIdentity) m.set(x);
  return subgroup_from_members(source_, m);
}

Subgroup Morphism::image() const {
  std::vector<Elem> seed;
  for (Elem s : source_.generators()) seed.push_back(images_[s]);
  return subgroup_closure(target_, seed);
}

bool Morphism::is_injective() const { return kernel().is_trivial(); }

Subgroup Morphism::preimage(const Subgroup& k) const {
  Bitset m(source_.order());
  for (Elem x = 0; x < source_.order(); ++x)
    if (k.contains(images_[x])) m.set(x);
  return subgroup_from_members(source_, m);
}

Subgroup Morphism::image_of(const Subgroup& a) const {
  std::vector<Elem> seed;
  for (Elem s : a.generators()) seed.push_back(images_[s]);
  return subgroup_closure(target_, seed);
}

Morphism compose(const Morphism& outer, const Morphism& inner) {
  if (!inner.target().same(outer.source())) throw InputError("compose: morphisms are not composable");
  std::vector<Elem> img(inner.source().order());
  for (Elem x = 0; x < img.size(); ++x) img[x] = outer(inner(x));
  return Morphism(inner.source(), outer.target(), std::move(img));
}

Morphism identity_morphism(const FiniteGroup& g) {
  std::vector<Elem> img(g.order());
  for (Elem x = 0; x < img.size(); ++x) img[x] = x;
  return Morphism(g, g, std::move(img));
}

Morphism make_morphism(const FiniteGroup& g, const FiniteGroup& h, std::span<const Elem> generatorImages) {
  if (generatorImages.size() != g.generators().size())
    throw InputError("make_morphism: expected " + std::to_string(g.generators().size()) + " generator images");
  for (Elem y : generatorImages)
    if (y >= h.order()) throw InputError("make_morphism: image id out of range");
  auto img = extend(g, h, spanning_tree(g), generatorImages);
  if (!img) throw InputError("make_morphism: images do not extend to a homomorphism");
  return Morphism(g, h, std::move(*img));
}

// ---------------------------------------------------------------- centralizers

Subgroup centralizer(const FiniteGroup& g, Elem x) {
  Bitset m(g.order());
  for (Elem y = 0; y < g.order(); ++y)
    if (g.mul(x, y) == g.mul(y, x)) m.set(y);
  return subgroup_from_members(g, m);
}

Subgroup centralizer(const FiniteGroup& g, const Subgroup& s) {
  Bitset m(g.order());
  const auto gens = s.generators();
  for (Elem y = 0; y < g.order(); ++y) {
    bool commutes = true;
    for (Elem x : gens)
      if (g.mul(x, y) != g.mul(y, x)) {
        commutes = false;
        break;
      }
    if (commutes) m.set(y);
  }
  return subgroup_from_members(g, m);
}

Subgroup center(const FiniteGroup& g) { return centralizer(g, whole_group(g)); }

Subgroup normalizer(const FiniteGroup& h, const Subgroup& k) {
  Bitset m(h.order());
  for (Elem y = 0; y < h.order(); ++y) {
    bool normalizes = true;
    for (Elem x : k.generators())
      if (!k.contains(h.conj(y, x))) {
        normalizes = false;
        break;
      }
    if (normalizes) m.set(y);
  }
  return subgroup_from_members(h, m);
}

// ---------------------------------------------------------------- automorphisms

std::vector<Morphism> automorphism_group(const FiniteGroup& g, const Caps& caps) {
  if (g.order() > caps.maxAutomorphismOrder)
    throw CapExceeded("automorphism search: order " + std::to_string(g.order()) + " exceeds cap " +
                      std::to_string(caps.maxAutomorphismOrder));
  const auto gens = g.generators();
  const SpanningTree tree = spanning_tree(g);

  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    const auto ord = g.element_order(gens[j]);
    for (Elem y = 0; y < g.order(); ++y)
      if (g.element_order(y) == ord) candidates[j].push_back(y);
  }

  std::vector<Morphism> result;
  std::vector<Elem> choice(gens.size());
  std::vector<std::size_t> idx(gens.size(), 0);
  auto record = [&] {
    auto img = extend(g, g, tree, choice);
    if (!img) return;
    Bitset hit(g.order());
    for (Elem y : *img) hit.set(y);
    if (hit.count() == g.order()) result.emplace_back(g, g, std::move(*img));
  };
  if (gens.empty()) {
    result.push_back(identity_morphism(g));
    return result;
  }
  // Odometer over the candidate lists.
  while (true) {
    for (std::size_t j = 0; j < gens.size(); ++j) choice[j] = candidates[j][idx[j]];
    record();
    std::size_t j = gens.size();
    while (j > 0) {
      --j;
      if (++idx[j] < candidates[j].size()) break;
      idx[j] = 0;
      if (j == 0) return result;
    }
  }
}

bool is_complete(const FiniteGroup& g, const Caps& caps) {
  if (!center(g).is_trivial()) return false;
  return automorphism_group(g, caps).size() == g.order();
}

// ---------------------------------------------------------------- products

FiniteGroup direct_product(std::span<const FiniteGroup> factors, const Caps& caps, std::string label) {
  if (label.empty()) {
    label = "prod:";
    for (std::size_t i = 0; i < factors.size(); ++i) label += (i ? "," : "") + factors[i].label();
  }
  if (factors.empty()) return FiniteGroup();

  const bool allPerm = std::all_of(factors.begin(), factors.end(), [](const auto& f) { return f.is_permutation(); });
  if (allPerm) {
    std::size_t degree = 0;
    for (const auto& f : factors) degree += f.degree();
    std::vector<Permutation> gens;
    std::size_t offset = 0;
    for (const auto& f : factors) {
      for (Elem s : f.generators()) {
        Permutation p(degree);
        for (std::size_t i = 0; i < degree; ++i) p[i] = static_cast<std::uint32_t>(i);
        const Permutation ps = f.permutation(s);
        for (std::size_t i = 0; i < ps.size(); ++i) p[offset + i] = static_cast<std::uint32_t>(offset + ps[i]);
        gens.push_back(std::move(p));
      }
      offset += f.degree();
    }
    return FiniteGroup::from_permutations(degree, gens, caps, label);
  }

  // Mixed radix ids, first factor most significant.
  std::size_t n = 1;
  for (const auto& f : factors) n *= f.order();
  check_order_cap(n, caps);
  std::vector<std::size_t> stride(factors.size(), 1);
  for (std::size_t i = factors.size() - 1; i > 0; --i) stride[i - 1] = stride[i] * factors[i].order();
  std::vector<std::uint16_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t c = 0;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        const auto ai = static_cast<Elem>((a / stride[i]) % factors[i].order());
        const auto bi = static_cast<Elem>((b / stride[i]) % factors[i].order());
        c += factors[i].mul(ai, bi) * stride[i];
      }
      table[a * n + b] = static_cast<std::uint16_t>(c);
    }
  std::vector<Elem> gens;
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (Elem s : factors[i].generators()) gens.push_back(static_cast<Elem>(s * stride[i]));
  return FiniteGroup::from_trusted_table(n, std::move(table), std::move(gens), label);
}

bool check_associativity(const FiniteGroup& g, const Caps& caps) {
  const std::size_t n = g.order();
  if (n <= caps.associativityExhaustiveLimit) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        const Elem ab = g.mul(a, b);
        for (Elem c = 0; c < n; ++c)
          if (g.mul(ab, c) != g.mul(a, g.mul(b, c))) return false;
      }
    return true;
  }
  std::mt19937_64 rng(caps.seed);
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
  for (std::size_t i = 0; i < caps.associativitySamples; ++i) {
    const Elem a = pick(rng), b = pick(rng), c = pick(rng);
    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) return false;
  }
  return true;
}

}  // namespace groupspec
