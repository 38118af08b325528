#include "groupspec/io.hpp"

#include <fstream>
#include <sstream>

#include "groupspec/catalog.hpp"
#include "groupspec/error.hpp"

namespace groupspec {

namespace {

std::size_t to_size(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw InputError(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

Permutation permutation_from_json(const Json& j, std::size_t degree) {
  if (j.is_string()) return parse_cycles(j.get<std::string>(), degree);
  if (!j.is_array()) throw InputError("permutation must be a cycle string or a one-line array");
  Permutation p;
  for (const auto& v : j) p.push_back(static_cast<std::uint32_t>(to_size(v, "permutation entry")));
  if (p.size() != degree) throw InputError("permutation has length " + std::to_string(p.size()) + ", expected " + std::to_string(degree));
  return p;
}

Letter letter_from_json(const FiniteGroup& g, const Json& t) {
  if (t.is_string()) {
    const std::string s = t.get<std::string>();
    if (!s.empty() && s[0] == 'x') {
      std::string digits = s.substr(1);
      int exponent = 1;
      if (const auto caret = digits.find('^'); caret != std::string::npos) {
        const std::string e = digits.substr(caret + 1);
        if (e == "-1")
          exponent = -1;
        else if (e != "1")
          throw InputError("bad exponent in token '" + s + "'");
        digits = digits.substr(0, caret);
      }
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw InputError("bad variable token '" + s + "'");
      return Variable{std::stoul(digits), exponent};
    }
  }
  return element_from_json(g, t);
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

FiniteGroup group_from_json(const Json& j, const Caps& caps) {
  if (j.is_string()) return build_group(j.get<std::string>(), caps);
  const std::string kind = field(j, "kind").is_string() ? j.at("kind").get<std::string>() : "";
  const std::string label = j.contains("label") && j.at("label").is_string() ? j.at("label").get<std::string>() : "";
  if (kind == "permutation") {
    const std::size_t degree = to_size(field(j, "degree"), "degree");
    std::vector<Permutation> gens;
    for (const auto& g : field(j, "generators")) gens.push_back(permutation_from_json(g, degree));
    return FiniteGroup::from_permutations(degree, gens, caps, label);
  }
  if (kind == "table") {
    const std::size_t order = to_size(field(j, "order"), "order");
    std::vector<std::vector<Elem>> mul;
    for (const auto& row : field(j, "mul")) {
      std::vector<Elem> r;
      for (const auto& v : row) r.push_back(static_cast<Elem>(to_size(v, "table entry")));
      mul.push_back(std::move(r));
    }
    if (mul.size() != order) throw InputError("table has " + std::to_string(mul.size()) + " rows, expected " + std::to_string(order));
    return FiniteGroup::from_table(mul, caps, label);
  }
  throw InputError("group kind must be 'permutation' or 'table'");
}

Elem element_from_json(const FiniteGroup& g, const Json& j) {
  if (j.is_number_integer()) {
    const std::size_t e = to_size(j, "element id");
    if (e >= g.order()) throw InputError("element id " + std::to_string(e) + " out of range");
    return static_cast<Elem>(e);
  }
  if (!g.is_permutation()) throw InputError("elements of a table group must be ids");
  const auto found = g.find(permutation_from_json(j, g.degree()));
  if (!found) throw InputError("permutation " + j.dump() + " is not in the group");
  return *found;
}

GGroup ggroup_from_json(const Json& j, const Caps& caps) {
  FiniteGroup g = group_from_json(field(j, "group"), caps);
  FiniteGroup h = group_from_json(field(j, "ambient"), caps);
  if (j.contains("embed")) {
    if (!j.at("embed").is_string()) throw InputError("'embed' must be a name");
    return GGroup(g, h, named_embedding(g, h, j.at("embed").get<std::string>()));
  }
  std::vector<Elem> images;
  for (const auto& e : field(j, "embedding")) images.push_back(element_from_json(h, e));
  if (images.size() != g.generators().size())
    throw InputError("embedding lists " + std::to_string(images.size()) + " images for " +
                     std::to_string(g.generators().size()) + " generators");
  return GGroup(g, h, make_morphism(g, h, images));
}

SystemInput system_from_json(const Json& j, const Caps& caps) { return system_from_json(j, nullptr, caps); }

SystemInput system_from_json(const Json& j, const FiniteGroup* group, const Caps& caps) {
  SystemInput in;
  if (j.is_object() && j.contains("group"))
    in.group = group_from_json(j.at("group"), caps);
  else if (group)
    in.group = *group;
  else
    throw InputError("system needs a group (field 'group' or --g)");
  if (j.is_object() && j.contains("commutation")) {
    const Json& c = j.at("commutation");
    in.variables = to_size(field(c, "variables"), "variables");
    in.words = commutation_system(in.group, element_from_json(in.group, field(c, "element")), in.variables);
    return in;
  }
  in.variables = to_size(field(j, "variables"), "variables");
  for (const auto& w : field(j, "words")) {
    if (!w.is_array()) throw InputError("a word is a list of tokens");
    Word word;
    for (const auto& t : w) word.letters.push_back(letter_from_json(in.group, t));
    validate(word, in.group, in.variables);
    in.words.push_back(std::move(word));
  }
  return in;
}

Json element_json(const FiniteGroup& g, Elem e) {
  if (g.is_permutation()) return format_cycles(g.permutation(e));
  return e;
}

Json elements_json(const FiniteGroup& g, const std::vector<Elem>& es) {
  Json a = Json::array();
  for (Elem e : es) a.push_back(element_json(g, e));
  return a;
}

Json subgroup_json(const Subgroup& s) {
  Json j;
  j["order"] = s.order();
  j["generators"] = elements_json(s.parent(), std::vector<Elem>(s.generators().begin(), s.generators().end()));
  j["members"] = s.elements();
  return j;
}

Json bitset_json(const Bitset& b) { return b.members(); }

Json caps_json(const Caps& c) {
  Json j;
  j["maxGroupOrder"] = c.maxGroupOrder;
  j["maxAutomorphismOrder"] = c.maxAutomorphismOrder;
  j["maxClasses"] = c.maxClasses;
  j["maxSections"] = c.maxSections;
  j["maxSolutionSpace"] = c.maxSolutionSpace;
  j["maxLieVectors"] = c.maxLieVectors;
  return j;
}

Json spectrum_json(const Spectrum& s) {
  Json j;
  if (s.owner) {
    j["base"] = {{"label", s.owner->base().label()}, {"order", s.owner->base().order()}};
    j["imageGenerators"] =
        elements_json(s.ambient, std::vector<Elem>(s.owner->image().generators().begin(), s.owner->image().generators().end()));
  }
  j["ambient"] = {{"label", s.ambient.label()}, {"order", s.ambient.order()}};
  j["normalSubgroups"] = s.normals.size();
  j["size"] = s.size();
  Json pts = Json::array();
  for (std::size_t i = 0; i < s.size(); ++i) {
    Json p = subgroup_json(s.points[i].subgroup);
    p["quotientOrder"] = s.points[i].quotient.group.order();
    pts.push_back(std::move(p));
  }
  j["points"] = std::move(pts);
  Json closed = Json::array();
  for (const auto& c : s.closedSets) closed.push_back(bitset_json(c));
  j["closedSets"] = std::move(closed);
  j["specialization"] = s.specialization;
  return j;
}

Json domain_json(const GGroup& x, const DomainCheck& d) {
  Json j;
  j["base"] = {{"label", x.base().label()}, {"order", x.base().order()}};
  j["ambient"] = {{"label", x.ambient().label()}, {"order", x.ambient().order()}};
  j["isDomain"] = d.isDomain;
  if (d.zeroDivisor) {
    j["zeroDivisor"] = element_json(x.ambient(), *d.zeroDivisor);
    j["witness"] = element_json(x.ambient(), *d.witness);
    j["orbitSubgroupOrder"] = orbit_subgroup(x, *d.zeroDivisor).order();
  }
  j["orbitsScanned"] = d.orbitsScanned;
  j["distinctOrbitSubgroups"] = d.distinctOrbitSubgroups;
  return j;
}

Json topology_json(const FiniteTopology& t) {
  Json j;
  j["points"] = t.pointCount;
  Json closed = Json::array(), open = Json::array(), minOpen = Json::array();
  for (const auto& c : t.closedSets) closed.push_back(bitset_json(c));
  for (const auto& o : t.open_sets()) open.push_back(bitset_json(o));
  bool discrete = true;
  for (std::size_t p = 0; p < t.pointCount; ++p) {
    minOpen.push_back(bitset_json(t.minOpen[p]));
    discrete = discrete && t.minOpen[p].count() == 1;
  }
  j["closedSets"] = std::move(closed);
  j["openSets"] = std::move(open);
  j["minOpen"] = std::move(minOpen);
  j["discrete"] = discrete;
  return j;
}

Json ring_json(const FiniteGroup& g, const RingElement& r) {
  Json a = Json::array();
  for (const auto& [e, k] : r.terms) a.push_back({{"element", element_json(g, e)}, {"coeff", k}});
  return a;
}

std::string hasse_dot(const std::string& name, const std::vector<std::string>& labels,
                      const std::vector<std::pair<std::size_t, std::size_t>>& below) {
  std::vector<Bitset> up(labels.size(), Bitset(labels.size()));
  for (const auto& [a, b] : below) up[a].set(b);
  std::ostringstream o;
  o << "digraph \"" << name << "\" {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < labels.size(); ++i) o << "  p" << i << " [label=\"" << labels[i] << "\"];\n";
  for (const auto& [a, b] : below) {
    // keep covering pairs only
    bool covered = true;
    for (std::size_t c : up[a].members())
      if (c != b && up[c].test(b)) covered = false;
    if (covered) o << "  p" << a << " -> p" << b << ";\n";
  }
  o << "}\n";
  return o.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

}  // namespace groupspec
