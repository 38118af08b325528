#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "groupspec/caps.hpp"
#include "groupspec/equations.hpp"
#include "groupspec/group.hpp"
#include "groupspec/sheaf.hpp"
#include "groupspec/spectrum.hpp"

namespace groupspec {

using Json = nlohmann::ordered_json;

Json read_json_file(const std::string& path);

/// A catalog name, {"kind":"permutation","degree":n,"generators":[...]} or
/// {"kind":"table","order":n,"mul":[[...]]}. Permutation generators are
/// one-line arrays or cycle strings.
FiniteGroup group_from_json(const Json& j, const Caps& caps = {});

/// Element given as an id, a one-line array or a cycle string.
Elem element_from_json(const FiniteGroup& g, const Json& j);

/// {"group":..., "ambient":..., "embedding":[images of the group's generators]}
/// or {"group":..., "ambient":..., "embed":"first-factor"}.
GGroup ggroup_from_json(const Json& j, const Caps& caps = {});

struct SystemInput {
  FiniteGroup group;
  std::size_t variables = 0;
  System words;
};

/// {"group":..., "variables":n, "words":[[token, ...], ...]} where a token is
/// "x3", "x3^-1", an element id, a one-line array or a cycle string; or
/// {"group":..., "commutation":{"element":..., "variables":n}}.
SystemInput system_from_json(const Json& j, const Caps& caps = {});
/// `group` from --g when the file has none.
SystemInput system_from_json(const Json& j, const FiniteGroup* group, const Caps& caps);

/// Cycle notation for permutation groups, the id otherwise.
Json element_json(const FiniteGroup& g, Elem e);
Json elements_json(const FiniteGroup& g, const std::vector<Elem>& es);
/// {"order", "generators", "members"}
Json subgroup_json(const Subgroup& s);
Json bitset_json(const Bitset& b);
Json caps_json(const Caps& c);

Json spectrum_json(const Spectrum& s);
Json domain_json(const GGroup& x, const DomainCheck& d);
Json topology_json(const FiniteTopology& t);
Json ring_json(const FiniteGroup& g, const RingElement& r);

/// Hasse diagram of a partial order given by all strictly-below pairs
/// (a, b) meaning a < b. Edges point from a to b.
std::string hasse_dot(const std::string& name, const std::vector<std::string>& labels,
                      const std::vector<std::pair<std::size_t, std::size_t>>& below);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace groupspec
