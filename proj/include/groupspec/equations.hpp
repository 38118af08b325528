#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "groupspec/caps.hpp"
#include "groupspec/group.hpp"

namespace groupspec {

struct Variable {
  std::size_t index = 0;
  int exponent = 1;  // +1 or -1
  friend bool operator==(const Variable&, const Variable&) = default;
};

/// A letter is a constant of G or a variable power x_i^{±1}.
using Letter = std::variant<Elem, Variable>;

/// Unreduced word in G * F(x_0, ..., x_{n-1}).
struct Word {
  std::vector<Letter> letters;
  friend bool operator==(const Word&, const Word&) = default;
};

using System = std::vector<Word>;

/// Throws InputError on an out-of-range constant, variable index, or
/// exponent other than ±1.
void validate(const Word& w, const FiniteGroup& g, std::size_t variables);

/// Left-to-right product after substitution.
Elem evaluate(const Word& w, const FiniteGroup& g, std::span<const Elem> assignment);

/// Tuples of G^n satisfying every word, in lexicographic order. `tuples` is
/// flat: tuple k occupies [k*n, (k+1)*n).
struct SolutionSet {
  FiniteGroup group;
  std::size_t variables = 0;
  std::vector<Elem> tuples;

  std::size_t size() const { return variables == 0 ? tuples.empty() ? 0 : 1 : tuples.size() / variables; }
  std::span<const Elem> tuple(std::size_t k) const { return {tuples.data() + k * variables, variables}; }
  bool contains(std::span<const Elem> t) const;
};

/// Exhaustive filter of G^n. Throws CapExceeded when |G|^n exceeds
/// caps.maxSolutionSpace.
SolutionSet solutions(const System& s, const FiniteGroup& g, std::size_t variables, const Caps& caps = {});

/// g x_i g^-1 x_i^-1 for i < n.
System commutation_system(const FiniteGroup& group, Elem g, std::size_t variables);

/// Conjugates every constant by h.
System conjugate_constants(const System& s, const FiniteGroup& g, Elem h);

/// Readable form, e.g. "(0 1)·x0·x1^-1".
std::string format_word(const Word& w, const FiniteGroup& g);

}  // namespace groupspec
