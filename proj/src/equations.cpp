#include "groupspec/equations.hpp"

#include <algorithm>

#include "groupspec/error.hpp"

namespace groupspec {

void validate(const Word& w, const FiniteGroup& g, std::size_t variables) {
  for (const auto& l : w.letters) {
    if (const auto* c = std::get_if<Elem>(&l)) {
      if (*c >= g.order()) throw InputError("word constant " + std::to_string(*c) + " is not an element");
    } else {
      const auto& v = std::get<Variable>(l);
      if (v.index >= variables)
        throw InputError("variable x" + std::to_string(v.index) + " out of range (" + std::to_string(variables) +
                         " declared)");
      if (v.exponent != 1 && v.exponent != -1) throw InputError("variable exponent must be 1 or -1");
    }
  }
}

Elem evaluate(const Word& w, const FiniteGroup& g, std::span<const Elem> assignment) {
  Elem r = kIdentity;
  for (const auto& l : w.letters) {
    if (const auto* c = std::get_if<Elem>(&l)) {
      r = g.mul(r, *c);
    } else {
      const auto& v = std::get<Variable>(l);
      const Elem x = assignment[v.index];
      r = g.mul(r, v.exponent > 0 ? x : g.inv(x));
    }
  }
  return r;
}

bool SolutionSet::contains(std::span<const Elem> t) const {
  if (t.size() != variables) return false;
  if (variables == 0) return !tuples.empty();
  // tuples are sorted lexicographically
  std::size_t lo = 0, hi = size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const auto m = tuple(mid);
    if (std::lexicographical_compare(m.begin(), m.end(), t.begin(), t.end()))
      lo = mid + 1;
    else
      hi = mid;
  }
  return lo < size() && std::equal(t.begin(), t.end(), tuple(lo).begin());
}

SolutionSet solutions(const System& s, const FiniteGroup& g, std::size_t variables, const Caps& caps) {
  for (const auto& w : s) validate(w, g, variables);
  std::size_t space = 1;
  for (std::size_t i = 0; i < variables; ++i) {
    if (space > caps.maxSolutionSpace / g.order())
      throw CapExceeded("solution space |G|^n exceeds " + std::to_string(caps.maxSolutionSpace));
    space *= g.order();
  }
  SolutionSet out{g, variables, {}};
  if (variables == 0) {
    // the single empty tuple is stored as a sentinel
    const bool ok = std::all_of(s.begin(), s.end(), [&](const Word& w) { return evaluate(w, g, {}) == kIdentity; });
    if (ok) out.tuples.push_back(kIdentity);
    return out;
  }
  std::vector<Elem> t(variables, kIdentity);
  for (std::size_t k = 0; k < space; ++k) {
    bool ok = true;
    for (const auto& w : s)
      if (evaluate(w, g, t) != kIdentity) {
        ok = false;
        break;
      }
    if (ok) out.tuples.insert(out.tuples.end(), t.begin(), t.end());
    for (std::size_t i = variables; i-- > 0;) {
      if (++t[i] < g.order()) break;
      t[i] = kIdentity;
    }
  }
  return out;
}

System commutation_system(const FiniteGroup& group, Elem g, std::size_t variables) {
  if (g >= group.order()) throw InputError("commutation system: not an element");
  System s;
  for (std::size_t i = 0; i < variables; ++i) {
    Word w;
    w.letters = {Letter{g}, Letter{Variable{i, 1}}, Letter{group.inv(g)}, Letter{Variable{i, -1}}};
    s.push_back(std::move(w));
  }
  return s;
}

System conjugate_constants(const System& s, const FiniteGroup& g, Elem h) {
  System out = s;
  for (auto& w : out)
    for (auto& l : w.letters)
      if (auto* c = std::get_if<Elem>(&l)) *c = g.conj(h, *c);
  return out;
}

std::string format_word(const Word& w, const FiniteGroup& g) {
  if (w.letters.empty()) return "1";
  std::string out;
  for (const auto& l : w.letters) {
    if (!out.empty()) out += "·";
    if (const auto* c = std::get_if<Elem>(&l)) {
      out += g.is_permutation() ? format_cycles(g.permutation(*c)) : std::to_string(*c);
    } else {
      const auto& v = std::get<Variable>(l);
      out += "x" + std::to_string(v.index);
      if (v.exponent < 0) out += "^-1";
    }
  }
  return out;
}

}  // namespace groupspec
