#include "groupspec/sheaf.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <set>

#include "groupspec/error.hpp"

namespace groupspec {

namespace {

constexpr std::size_t kMaxSolveColumns = 2048;

void require_open(const PointSpace& x, const Bitset& u) {
  if (u.size() != x.size()) throw InputError("open set has the wrong point count");
  if (!x.topology.is_open(u)) throw InputError("set is not open");
}

std::int64_t checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw CapExceeded("integer coefficient overflow");
  return static_cast<std::int64_t>(v);
}

void require_same_ring(const RingElement& a, const RingElement& b) {
  if (!(a.coeff == b.coeff)) throw InputError("coefficient ring mismatch: " + a.coeff.name() + " vs " + b.coeff.name());
}

void accumulate(RingElement& into, Elem h, std::int64_t k) {
  const std::int64_t v = into.coeff.reduce(checked(static_cast<__int128>(into.terms[h]) + k));
  if (v == 0)
    into.terms.erase(h);
  else
    into.terms[h] = v;
}

std::vector<std::size_t> germ_points(const PointSpace& x, const Bitset& u, std::size_t p) {
  return (x.topology.minOpen[p] & u).members();
}

}  // namespace

PointSpace point_space(const Spectrum& s) {
  PointSpace x;
  x.ambient = s.ambient;
  for (const auto& p : s.points) {
    x.points.push_back(p.subgroup);
    x.quotients.push_back(p.quotient);
  }
  x.topology = s.topology();
  return x;
}

PointSpace containment_space(const FiniteGroup& h, std::vector<Subgroup> points, const Caps& caps) {
  PointSpace x;
  x.ambient = h;
  for (const auto& p : points) {
    if (!p.parent().same(h)) throw InputError("point is a subgroup of a different group");
    if (!is_normal(p)) throw InputError("point is not a normal subgroup");
    x.quotients.push_back(quotient(p));
  }
  x.points = std::move(points);
  std::vector<Bitset> family;
  for (const auto& n : normal_subgroups(h, caps)) {
    Bitset v(x.points.size());
    for (std::size_t p = 0; p < x.points.size(); ++p)
      if (n.is_subgroup_of(x.points[p])) v.set(p);
    family.push_back(std::move(v));
  }
  x.topology = FiniteTopology::generated_by(x.points.size(), family);
  return x;
}

std::optional<std::vector<Elem>> l_representatives(const PointSpace& x, const Bitset& u,
                                                   const std::vector<Elem>& values) {
  require_open(x, u);
  if (values.size() != x.size()) throw InputError("section values: one entry per point expected");
  std::vector<Elem> reps(x.size(), kIdentity);
  for (std::size_t p = u.first(); p < u.size(); p = u.next(p + 1)) {
    if (values[p] >= x.quotients[p].group.order()) throw InputError("section value out of range");
    const auto germ = germ_points(x, u, p);
    bool found = false;
    for (Elem h = 0; h < x.ambient.order() && !found; ++h) {
      bool ok = true;
      for (std::size_t q : germ)
        if (x.quotients[q].projection(h) != values[q]) {
          ok = false;
          break;
        }
      if (ok) {
        reps[p] = h;
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  return reps;
}

bool is_l_section(const PointSpace& x, const Bitset& u, const std::vector<Elem>& values) {
  return l_representatives(x, u, values).has_value();
}

LSection l_section_of(const PointSpace& x, const Bitset& u, Elem h) {
  require_open(x, u);
  LSection s{u, std::vector<Elem>(x.size(), kIdentity), std::vector<Elem>(x.size(), kIdentity)};
  for (std::size_t p = u.first(); p < u.size(); p = u.next(p + 1)) {
    s.values[p] = x.quotients[p].projection(h);
    s.representatives[p] = h;
  }
  return s;
}

std::vector<LSection> l_sections(const PointSpace& x, const Bitset& u, const Caps& caps) {
  require_open(x, u);
  const auto pts = u.members();
  std::size_t product = 1;
  for (std::size_t p : pts) {
    const std::size_t q = x.quotients[p].group.order();
    if (product > caps.maxSections / q) throw CapExceeded("section enumeration exceeds the cap");
    product *= q;
  }

  // For each point: the germ points, and the achievable value tuples on them
  // with a realizing element.
  struct Germ {
    std::vector<std::size_t> points;
    std::map<std::vector<Elem>, Elem> lifts;
  };
  std::vector<Germ> germs(x.size());
  // checkAt[k]: points whose germs are fully assigned once pts[k] is.
  std::vector<std::vector<std::size_t>> checkAt(pts.size());
  for (std::size_t k = 0; k < pts.size(); ++k) {
    Germ& g = germs[pts[k]];
    g.points = germ_points(x, u, pts[k]);
    for (Elem h = x.ambient.order(); h-- > 0;) {
      std::vector<Elem> t;
      for (std::size_t q : g.points) t.push_back(x.quotients[q].projection(h));
      g.lifts[std::move(t)] = h;  // descending scan keeps the least lift
    }
    std::size_t last = 0;
    for (std::size_t q : g.points) last = std::max(last, static_cast<std::size_t>(std::find(pts.begin(), pts.end(), q) - pts.begin()));
    checkAt[last].push_back(pts[k]);
  }

  std::vector<LSection> out;
  std::vector<Elem> values(x.size(), kIdentity);
  std::vector<Elem> reps(x.size(), kIdentity);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == pts.size()) {
      out.push_back(LSection{u, values, reps});
      return;
    }
    const std::size_t p = pts[k];
    for (Elem v = 0; v < x.quotients[p].group.order(); ++v) {
      values[p] = v;
      bool ok = true;
      for (std::size_t c : checkAt[k]) {
        std::vector<Elem> t;
        for (std::size_t q : germs[c].points) t.push_back(values[q]);
        auto it = germs[c].lifts.find(t);
        if (it == germs[c].lifts.end()) {
          ok = false;
          break;
        }
        reps[c] = it->second;
      }
      if (ok) rec(k + 1);
    }
    values[p] = kIdentity;
  };
  rec(0);
  return out;
}

LSection restrict(const PointSpace& x, const LSection& s, const Bitset& sub) {
  require_open(x, sub);
  if (!sub.is_subset_of(s.domain)) throw InputError("restriction target is not inside the domain");
  LSection r{sub, std::vector<Elem>(x.size(), kIdentity), std::vector<Elem>(x.size(), kIdentity)};
  for (std::size_t p = sub.first(); p < sub.size(); p = sub.next(p + 1)) {
    r.values[p] = s.values[p];
    r.representatives[p] = s.representatives[p];
  }
  return r;
}

LSection glue(const PointSpace& x, const std::vector<LSection>& family) {
  Bitset u(x.size());
  for (const auto& s : family) {
    require_open(x, s.domain);
    u |= s.domain;
  }
  LSection g{u, std::vector<Elem>(x.size(), kIdentity), std::vector<Elem>(x.size(), kIdentity)};
  Bitset assigned(x.size());
  for (const auto& s : family)
    for (std::size_t p = s.domain.first(); p < s.domain.size(); p = s.domain.next(p + 1)) {
      if (assigned.test(p)) {
        if (g.values[p] != s.values[p]) throw InputError("sections disagree on an overlap");
        continue;
      }
      assigned.set(p);
      g.values[p] = s.values[p];
      g.representatives[p] = s.representatives[p];
    }
  return g;
}

Coeff Coeff::parse(std::string_view text) {
  if (text == "z") return Coeff{0};
  constexpr std::string_view prefix = "zmod:";
  if (text.substr(0, prefix.size()) == prefix) {
    const auto digits = text.substr(prefix.size());
    std::int64_t m = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
    if (ec == std::errc{} && end == digits.data() + digits.size() && m >= 2) return Coeff{m};
  }
  throw InputError("coefficient ring must be z or zmod:<m> with m >= 2, got '" + std::string(text) + "'");
}

std::string Coeff::name() const { return modulus == 0 ? "z" : "zmod:" + std::to_string(modulus); }

std::int64_t Coeff::reduce(std::int64_t v) const {
  if (modulus == 0) return v;
  const std::int64_t r = v % modulus;
  return r < 0 ? r + modulus : r;
}

RingElement ring_basis(Coeff c, Elem h, std::int64_t k) {
  RingElement r{c, {}};
  accumulate(r, h, k);
  return r;
}

RingElement ring_add(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  RingElement r = a;
  for (const auto& [h, k] : b.terms) accumulate(r, h, k);
  return r;
}

RingElement ring_neg(const RingElement& a) {
  RingElement r{a.coeff, {}};
  for (const auto& [h, k] : a.terms) accumulate(r, h, checked(-static_cast<__int128>(k)));
  return r;
}

RingElement ring_sub(const RingElement& a, const RingElement& b) { return ring_add(a, ring_neg(b)); }

RingElement ring_mul(const FiniteGroup& h, const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  RingElement r{a.coeff, {}};
  for (const auto& [x, kx] : a.terms)
    for (const auto& [y, ky] : b.terms) {
      if (x >= h.order() || y >= h.order()) throw InputError("ring element outside the group");
      accumulate(r, h.mul(x, y), checked(static_cast<__int128>(kx) * ky));
    }
  return r;
}

RingElement ring_project(const Morphism& f, const RingElement& a) {
  RingElement r{a.coeff, {}};
  for (const auto& [h, k] : a.terms) {
    if (h >= f.source().order()) throw InputError("ring element outside the group");
    accumulate(r, f(h), k);
  }
  return r;
}

std::optional<std::vector<std::int64_t>> solve_integer(const std::vector<std::vector<std::int64_t>>& a,
                                                       const std::vector<std::int64_t>& b, std::int64_t m) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw InputError("solve_integer: dimension mismatch");
  const std::size_t cols = rows ? a[0].size() : 0;
  const std::size_t total = cols + (m > 0 ? rows : 0);

  // Column operations bring M to lower echelon form, mirrored on U so that
  // A U = M throughout.
  std::vector<std::vector<std::int64_t>> mm(rows, std::vector<std::int64_t>(total, 0));
  for (std::size_t r = 0; r < rows; ++r) {
    if (a[r].size() != cols) throw InputError("solve_integer: ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) mm[r][c] = a[r][c];
    if (m > 0) mm[r][cols + r] = m;
  }
  std::vector<std::vector<std::int64_t>> uu(total, std::vector<std::int64_t>(total, 0));
  for (std::size_t c = 0; c < total; ++c) uu[c][c] = 1;

  auto axpy = [&](std::size_t dst, std::size_t src, std::int64_t q) {  // col dst -= q * col src
    for (std::size_t r = 0; r < rows; ++r)
      if (mm[r][src]) mm[r][dst] = checked(static_cast<__int128>(mm[r][dst]) - static_cast<__int128>(q) * mm[r][src]);
    for (std::size_t r = 0; r < total; ++r)
      if (uu[r][src]) uu[r][dst] = checked(static_cast<__int128>(uu[r][dst]) - static_cast<__int128>(q) * uu[r][src]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (auto& row : mm) std::swap(row[i], row[j]);
    for (auto& row : uu) std::swap(row[i], row[j]);
  };

  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
  std::size_t col = 0;
  for (std::size_t r = 0; r < rows && col < total; ++r) {
    while (true) {
      std::size_t best = total;
      for (std::size_t c = col; c < total; ++c)
        if (mm[r][c] != 0 && (best == total || std::llabs(mm[r][c]) < std::llabs(mm[r][best]))) best = c;
      if (best == total) break;
      if (best != col) swap_cols(best, col);
      bool reduced = true;
      for (std::size_t c = col + 1; c < total; ++c)
        if (mm[r][c] != 0) {
          axpy(c, col, mm[r][c] / mm[r][col]);
          if (mm[r][c] != 0) reduced = false;
        }
      if (reduced) {
        pivots.emplace_back(r, col);
        ++col;
        break;
      }
    }
  }

  std::vector<std::int64_t> y(total, 0);
  for (const auto& [r, c] : pivots) {
    __int128 residual = b[r];
    for (std::size_t k = 0; k < c; ++k) residual -= static_cast<__int128>(mm[r][k]) * y[k];
    if (residual % mm[r][c] != 0) return std::nullopt;
    y[c] = checked(residual / mm[r][c]);
  }
  for (std::size_t r = 0; r < rows; ++r) {
    __int128 s = 0;
    for (std::size_t k = 0; k < total; ++k) s += static_cast<__int128>(mm[r][k]) * y[k];
    if (s != b[r]) return std::nullopt;
  }
  std::vector<std::int64_t> x(cols, 0);
  for (std::size_t i = 0; i < cols; ++i) {
    __int128 s = 0;
    for (std::size_t k = 0; k < total; ++k) s += static_cast<__int128>(uu[i][k]) * y[k];
    if (m > 0) {
      s %= m;
      if (s < 0) s += m;
    }
    x[i] = checked(s);
  }
  return x;
}

std::optional<std::vector<RingElement>> a_representatives(const PointSpace& x, Coeff c, const Bitset& u,
                                                          const std::vector<RingElement>& values,
                                                          const std::vector<RingElement>& candidates) {
  require_open(x, u);
  if (values.size() != x.size()) throw InputError("section values: one entry per point expected");
  std::vector<RingElement> reps(x.size(), RingElement{c, {}});
  for (std::size_t p = u.first(); p < u.size(); p = u.next(p + 1)) {
    if (!(values[p].coeff == c)) throw InputError("section value has the wrong coefficient ring");
    for (const auto& [h, k] : values[p].terms)
      if (h >= x.quotients[p].group.order()) throw InputError("section value outside the quotient");
  }
  for (std::size_t p = u.first(); p < u.size(); p = u.next(p + 1)) {
    const auto germ = germ_points(x, u, p);
    auto realizes = [&](const RingElement& r) {
      for (std::size_t q : germ)
        if (!(ring_project(x.quotients[q].projection, r) == values[q])) return false;
      return true;
    };
    if (p < candidates.size() && candidates[p].coeff == c && realizes(candidates[p])) {
      reps[p] = candidates[p];
      continue;
    }
    // Unknowns: one coefficient per coset of K = ∩ germ, placed on its least
    // member. Equations: coset sums for each Q in the germ.
    Subgroup k = whole_group(x.ambient);
    for (std::size_t q : germ) k = intersection(k, x.points[q]);
    const Quotient byK = quotient(k);
    const std::size_t cols = byK.group.order();
    if (cols > kMaxSolveColumns) throw CapExceeded("section solve: too many cosets");
    std::vector<Elem> least(cols, 0);
    std::vector<bool> seen(cols, false);
    for (Elem h = 0; h < x.ambient.order(); ++h)
      if (!seen[byK.projection(h)]) {
        seen[byK.projection(h)] = true;
        least[byK.projection(h)] = h;
      }
    std::vector<std::vector<std::int64_t>> a;
    std::vector<std::int64_t> b;
    for (std::size_t q : germ) {
      const std::size_t n = x.quotients[q].group.order();
      const std::size_t base = a.size();
      a.resize(base + n, std::vector<std::int64_t>(cols, 0));
      for (std::size_t col = 0; col < cols; ++col) a[base + x.quotients[q].projection(least[col])][col] = 1;
      for (std::size_t i = 0; i < n; ++i) {
        auto it = values[q].terms.find(static_cast<Elem>(i));
        b.push_back(it == values[q].terms.end() ? 0 : it->second);
      }
    }
    const auto sol = solve_integer(a, b, c.modulus);
    if (!sol) return std::nullopt;
    RingElement r{c, {}};
    for (std::size_t col = 0; col < cols; ++col)
      if ((*sol)[col] != 0) accumulate(r, least[col], (*sol)[col]);
    if (!realizes(r)) throw InvariantViolation("section solve returned a non-solution");
    reps[p] = std::move(r);
  }
  return reps;
}

bool is_a_section(const PointSpace& x, Coeff c, const Bitset& u, const std::vector<RingElement>& values,
                  const std::vector<RingElement>& candidates) {
  return a_representatives(x, c, u, values, candidates).has_value();
}

ASection a_section_of(const PointSpace& x, const Bitset& u, const RingElement& r) {
  require_open(x, u);
  ASection s{u, std::vector<RingElement>(x.size(), RingElement{r.coeff, {}}),
             std::vector<RingElement>(x.size(), RingElement{r.coeff, {}})};
  for (std::size_t p = u.first(); p < u.size(); p = u.next(p + 1)) {
    s.values[p] = ring_project(x.quotients[p].projection, r);
    s.representatives[p] = r;
  }
  return s;
}

namespace {

void check_push(const PointSpace& source, const PointSpace& target, const std::vector<std::size_t>& pointMap,
                const Morphism& f) {
  if (!f.source().same(source.ambient) || !f.target().same(target.ambient))
    throw InputError("pushforward: morphism does not run between the two spaces");
  if (pointMap.size() != target.size()) throw InputError("pushforward: point map has the wrong length");
  for (std::size_t i : pointMap)
    if (i >= source.size()) throw InputError("pushforward: point map out of range");
}

Bitset pulled_domain(const Bitset& domain, const std::vector<std::size_t>& pointMap) {
  Bitset d(pointMap.size());
  for (std::size_t j = 0; j < pointMap.size(); ++j)
    if (domain.test(pointMap[j])) d.set(j);
  return d;
}

}  // namespace

LSection push_l(const PointSpace& source, const PointSpace& target, const std::vector<std::size_t>& pointMap,
                const Morphism& f, const LSection& s) {
  check_push(source, target, pointMap, f);
  const Bitset d = pulled_domain(s.domain, pointMap);
  LSection r{d, std::vector<Elem>(target.size(), kIdentity), std::vector<Elem>(target.size(), kIdentity)};
  for (std::size_t j = d.first(); j < d.size(); j = d.next(j + 1)) {
    const Elem h = f(s.representatives[pointMap[j]]);
    r.values[j] = target.quotients[j].projection(h);
    r.representatives[j] = h;
  }
  return r;
}

ASection push_a(const PointSpace& source, const PointSpace& target, const std::vector<std::size_t>& pointMap,
                const Morphism& f, const ASection& s) {
  check_push(source, target, pointMap, f);
  const Bitset d = pulled_domain(s.domain, pointMap);
  const Coeff c = s.values.empty() ? Coeff{} : s.values.front().coeff;
  ASection r{d, std::vector<RingElement>(target.size(), RingElement{c, {}}),
             std::vector<RingElement>(target.size(), RingElement{c, {}})};
  for (std::size_t j = d.first(); j < d.size(); j = d.next(j + 1)) {
    RingElement h = ring_project(f, s.representatives[pointMap[j]]);
    r.values[j] = ring_project(target.quotients[j].projection, h);
    r.representatives[j] = std::move(h);
  }
  return r;
}

}  // namespace groupspec
