#include "groupspec/catalog.hpp"

#include <array>
#include <charconv>

#include "groupspec/error.hpp"

namespace groupspec {

namespace {

std::size_t parse_count(std::string_view text, std::string_view name) {
  std::size_t v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || v == 0) throw InputError("bad size in group name: " + std::string(name));
  return v;
}

Permutation identity_perm(std::size_t n) {
  Permutation p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::uint32_t>(i);
  return p;
}

Permutation cycle_perm(std::size_t n, std::initializer_list<std::uint32_t> cycle) {
  Permutation p = identity_perm(n);
  const std::vector<std::uint32_t> c(cycle);
  for (std::size_t i = 0; i < c.size(); ++i) p[c[i]] = c[(i + 1) % c.size()];
  return p;
}

Permutation rotation(std::size_t n) {
  Permutation p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::uint32_t>((i + 1) % n);
  return p;
}

FiniteGroup symmetric(std::size_t n, const Caps& caps, std::string label) {
  std::vector<Permutation> gens;
  if (n >= 2) gens.push_back(cycle_perm(n, {0, 1}));
  if (n >= 3) gens.push_back(rotation(n));
  return FiniteGroup::from_permutations(n, gens, caps, std::move(label));
}

FiniteGroup alternating(std::size_t n, const Caps& caps, std::string label) {
  std::vector<Permutation> gens;
  for (std::uint32_t k = 2; k < n; ++k) gens.push_back(cycle_perm(n, {0, 1, k}));
  return FiniteGroup::from_permutations(n, gens, caps, std::move(label));
}

FiniteGroup cyclic(std::size_t n, const Caps& caps, std::string label) {
  std::vector<Permutation> gens;
  if (n >= 2) gens.push_back(rotation(n));
  return FiniteGroup::from_permutations(n, gens, caps, std::move(label));
}

FiniteGroup dihedral(std::size_t n, const Caps& caps, std::string label) {
  if (n < 3) throw InputError("dih:n needs n >= 3");
  Permutation reflect(n);
  for (std::size_t i = 0; i < n; ++i) reflect[i] = static_cast<std::uint32_t>((n - i) % n);
  const std::vector<Permutation> gens{rotation(n), reflect};
  return FiniteGroup::from_permutations(n, gens, caps, std::move(label));
}

// Regular representation of the quaternion group. Point 2u + s is the unit
// (-1)^s * {1, i, j, k}[u].
FiniteGroup quaternion(const Caps& caps, std::string label) {
  // unit product table: kUnit[a][b] = {sign, unit}
  static constexpr std::array<std::array<std::array<int, 2>, 4>, 4> kUnit{{
      {{{0, 0}, {0, 1}, {0, 2}, {0, 3}}},
      {{{0, 1}, {1, 0}, {0, 3}, {1, 2}}},
      {{{0, 2}, {1, 3}, {1, 0}, {0, 1}}},
      {{{0, 3}, {0, 2}, {1, 1}, {1, 0}}},
  }};
  auto left = [&](int unit) {
    Permutation p(8);
    for (int pt = 0; pt < 8; ++pt) {
      const int s = pt % 2, u = pt / 2;
      const auto& r = kUnit[unit][u];
      p[pt] = static_cast<std::uint32_t>(2 * r[1] + ((s + r[0]) % 2));
    }
    return p;
  };
  const std::vector<Permutation> gens{left(1), left(2)};
  return FiniteGroup::from_permutations(8, gens, caps, std::move(label));
}

std::string strip_parens(std::string_view s) {
  while (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    int depth = 0;
    bool wraps = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
      depth += s[i] == '(' ? 1 : s[i] == ')' ? -1 : 0;
      if (depth == 0 && i + 1 < s.size()) {
        wraps = false;
        break;
      }
    }
    if (!wraps) break;
    s = s.substr(1, s.size() - 2);
  }
  return std::string(s);
}

}  // namespace

std::vector<std::string> split_top_level(std::string_view list) {
  std::vector<std::string> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= list.size(); ++i) {
    if (i == list.size() || (list[i] == ',' && depth == 0)) {
      parts.push_back(strip_parens(list.substr(start, i - start)));
      start = i + 1;
    } else if (list[i] == '(') {
      ++depth;
    } else if (list[i] == ')') {
      if (--depth < 0) throw InputError("unbalanced parentheses: " + std::string(list));
    }
  }
  if (depth != 0) throw InputError("unbalanced parentheses: " + std::string(list));
  return parts;
}

FiniteGroup build_group(std::string_view rawName, const Caps& caps) {
  const std::string name = strip_parens(rawName);
  const std::string_view n(name);
  if (n == "trivial") return FiniteGroup::from_permutations(1, {}, caps, name);
  if (n == "q8") return quaternion(caps, name);
  if (n.starts_with("prod:")) {
    std::vector<FiniteGroup> factors;
    for (const auto& part : split_top_level(n.substr(5))) {
      if (part.empty()) throw InputError("empty factor in " + name);
      factors.push_back(build_group(part, caps));
    }
    if (factors.size() < 2) throw InputError("prod needs at least two factors: " + name);
    return direct_product(factors, caps, name);
  }
  const auto colon = n.find(':');
  if (colon == std::string_view::npos) throw InputError("unknown group name: " + name);
  const auto kind = n.substr(0, colon);
  const std::size_t k = parse_count(n.substr(colon + 1), n);
  if (kind == "sym") return symmetric(k, caps, name);
  if (kind == "alt") return alternating(k, caps, name);
  if (kind == "cyc") return cyclic(k, caps, name);
  if (kind == "dih") return dihedral(k, caps, name);
  throw InputError("unknown group name: " + name);
}

Morphism named_embedding(const FiniteGroup& g, const FiniteGroup& h, std::string_view embed) {
  if (!g.is_permutation() || !h.is_permutation())
    throw InputError("named embeddings need permutation-backed groups");
  const std::size_t dg = g.degree(), dh = h.degree();
  const bool pad = embed == "identity" || embed == "first-factor" || embed == "fix-last";
  if (!pad && embed != "diagonal") throw InputError("unknown embedding: " + std::string(embed));
  if (dg > dh || (embed == "diagonal" && dh % dg != 0))
    throw InputError("embedding " + std::string(embed) + " does not fit the degrees");

  std::vector<Elem> images;
  for (Elem s : g.generators()) {
    const Permutation ps = g.permutation(s);
    Permutation p = identity_perm(dh);
    const std::size_t blocks = pad ? 1 : dh / dg;
    for (std::size_t b = 0; b < blocks; ++b)
      for (std::size_t i = 0; i < dg; ++i) p[b * dg + i] = static_cast<std::uint32_t>(b * dg + ps[i]);
    const auto id = h.find(p);
    if (!id) throw InputError("embedding " + std::string(embed) + ": image of a generator lies outside " + h.label());
    images.push_back(*id);
  }
  return make_morphism(g, h, images);
}

GGroup build_ggroup(std::string_view g, std::string_view h, std::string_view embed, const Caps& caps) {
  FiniteGroup base = build_group(g, caps);
  FiniteGroup ambient = build_group(h, caps);
  Morphism phi = named_embedding(base, ambient, embed);
  return GGroup(std::move(base), std::move(ambient), std::move(phi));
}

}  // namespace groupspec
