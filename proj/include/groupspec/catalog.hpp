#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "groupspec/caps.hpp"
#include "groupspec/group.hpp"
#include "groupspec/spectrum.hpp"

namespace groupspec {

/// Named groups:
///   trivial, sym:n, alt:n, cyc:n, dih:n (order 2n), q8,
///   prod:A,B[,C...]   (use parentheses to nest: prod:(prod:A,B),C)
/// All catalog groups are permutation-backed.
FiniteGroup build_group(std::string_view name, const Caps& caps = {});

/// Named structure maps between permutation groups:
///   identity, first-factor, fix-last  extend each permutation of G by fixed
///                                     points (G must act on the first points)
///   diagonal                          repeat it on every block of deg(G) points
Morphism named_embedding(const FiniteGroup& g, const FiniteGroup& h, std::string_view embed);

GGroup build_ggroup(std::string_view g, std::string_view h, std::string_view embed, const Caps& caps = {});

/// Splits "A,B,C" at commas outside parentheses; strips one pair of outer
/// parentheses from each part.
std::vector<std::string> split_top_level(std::string_view list);

}  // namespace groupspec
