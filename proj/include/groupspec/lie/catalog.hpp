#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>

#include "groupspec/error.hpp"
#include "groupspec/lie/algebra.hpp"

namespace groupspec::lie {

/// lie:sl2@p, lie:gl2@p, lie:heis@p, lie:abelian:n@p
struct LieName {
  std::string kind;  // sl2, gl2, heis, abelian
  Index dim = 0;
  std::uint32_t p = 0;
  std::string text;
};

inline LieName parse_lie_name(std::string_view name) {
  auto fail = [&](const std::string& why) -> LieName {
    throw InputError("bad Lie algebra name '" + std::string(name) + "': " + why);
  };
  const std::string_view prefix = "lie:";
  if (name.substr(0, prefix.size()) != prefix) return fail("expected lie:<kind>@<p>");
  const auto at = name.rfind('@');
  if (at == std::string_view::npos) return fail("missing @<p>");
  auto parse_uint = [&](std::string_view digits, std::uint64_t& out) {
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), out);
    return ec == std::errc{} && end == digits.data() + digits.size() && !digits.empty();
  };
  std::uint64_t p = 0;
  if (!parse_uint(name.substr(at + 1), p)) return fail("bad characteristic");
  const std::string_view kind = name.substr(prefix.size(), at - prefix.size());
  LieName n;
  n.p = static_cast<std::uint32_t>(p);
  n.text = std::string(name);
  if (kind == "sl2") {
    n.kind = "sl2";
    n.dim = 3;
  } else if (kind == "gl2") {
    n.kind = "gl2";
    n.dim = 4;
  } else if (kind == "heis") {
    n.kind = "heis";
    n.dim = 3;
  } else if (kind.substr(0, 8) == "abelian:") {
    std::uint64_t d = 0;
    if (!parse_uint(kind.substr(8), d) || d == 0 || d > 16) return fail("bad dimension");
    n.kind = "abelian";
    n.dim = static_cast<Index>(d);
  } else {
    return fail("unknown kind");
  }
  return n;
}

template <class S>
LieAlgebra<S> build_lie(const LieName& n) {
  using B = typename LieAlgebra<S>::Bracket;
  auto e = [&](Index i, long long k = 1) {
    Vector<S> v = Vector<S>::Zero(n.dim);
    v(i) = S(k);
    return v;
  };
  if (n.kind == "sl2")  // e, h, f
    return LieAlgebra<S>::from_brackets(3, {B{1, 0, e(0, 2)}, B{1, 2, e(2, -2)}, B{0, 2, e(1)}}, n.text);
  if (n.kind == "heis")  // x, y, z
    return LieAlgebra<S>::from_brackets(3, {B{0, 1, e(2)}}, n.text);
  if (n.kind == "gl2") {  // E11, E12, E21, E22; index 2r+c
    std::vector<B> br;
    for (Index a = 0; a < 4; ++a)
      for (Index b = a + 1; b < 4; ++b) {
        const Index ar = a / 2, ac = a % 2, brow = b / 2, bc = b % 2;
        Vector<S> v = Vector<S>::Zero(4);
        if (ac == brow) v(2 * ar + bc) += S(1);
        if (bc == ar) v(2 * brow + ac) -= S(1);
        br.push_back(B{a, b, v});
      }
    return LieAlgebra<S>::from_brackets(4, br, n.text);
  }
  return LieAlgebra<S>::abelian(n.dim, n.text);
}

/// identity: equal dimensions; canonical: sl2 into gl2 as trace-zero
/// matrices, otherwise the first coordinates.
template <class S>
Matrix<S> lie_embedding(const LieName& from, const LieName& to, std::string_view embed) {
  if (embed == "identity") {
    if (from.dim != to.dim || from.kind != to.kind) throw InputError("identity embedding needs equal algebras");
    return Matrix<S>::Identity(from.dim, from.dim);
  }
  if (embed != "canonical") throw InputError("unknown Lie embedding '" + std::string(embed) + "'");
  if (from.dim > to.dim) throw InputError("canonical embedding: source is larger than the target");
  Matrix<S> m = Matrix<S>::Zero(to.dim, from.dim);
  if (from.kind == "sl2" && to.kind == "gl2") {
    m(1, 0) = S(1);                   // e -> E12
    m(0, 1) = S(1), m(3, 1) = S(-1);  // h -> E11 - E22
    m(2, 2) = S(1);                   // f -> E21
    return m;
  }
  for (Index i = 0; i < from.dim; ++i) m(i, i) = S(1);
  return m;
}

}  // namespace groupspec::lie
