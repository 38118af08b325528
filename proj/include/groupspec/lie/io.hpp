#pragma once

#include <string>

#include <json.hpp>

#include "groupspec/lie/catalog.hpp"
#include "groupspec/lie/spectrum.hpp"

namespace groupspec::lie {

using Json = nlohmann::ordered_json;

/// Characteristic of a catalog name or of {"p": ...}.
inline std::uint32_t lie_prime(const Json& j) {
  if (j.is_string()) return parse_lie_name(j.get<std::string>()).p;
  if (!j.is_object() || !j.contains("p") || !j.at("p").is_number_unsigned())
    throw InputError("Lie input needs a field 'p'");
  return j.at("p").get<std::uint32_t>();
}

template <class S>
Vector<S> vector_from_json(const Json& j, Index dim) {
  if (!j.is_array() || static_cast<Index>(j.size()) != dim)
    throw InputError("expected a vector of length " + std::to_string(dim));
  Vector<S> v(dim);
  for (Index i = 0; i < dim; ++i) {
    if (!j[static_cast<std::size_t>(i)].is_number_integer()) throw InputError("vector entries must be integers");
    v(i) = S(j[static_cast<std::size_t>(i)].get<long long>());
  }
  return v;
}

/// A catalog name or {"dim": n, "brackets": [{"i", "j", "coeffs"}...]}.
template <class S>
LieAlgebra<S> algebra_from_json(const Json& j) {
  if (j.is_string()) return build_lie<S>(parse_lie_name(j.get<std::string>()));
  if (!j.is_object() || !j.contains("dim") || !j.at("dim").is_number_unsigned())
    throw InputError("Lie algebra needs a field 'dim'");
  const Index dim = j.at("dim").get<Index>();
  std::vector<typename LieAlgebra<S>::Bracket> br;
  if (j.contains("brackets"))
    for (const auto& b : j.at("brackets")) {
      if (!b.contains("i") || !b.contains("j") || !b.contains("coeffs"))
        throw InputError("bracket entries need i, j and coeffs");
      br.push_back({b.at("i").get<Index>(), b.at("j").get<Index>(), vector_from_json<S>(b.at("coeffs"), dim)});
    }
  const std::string label = j.contains("label") && j.at("label").is_string() ? j.at("label").get<std::string>() : "";
  return LieAlgebra<S>::from_brackets(dim, br, label);
}

/// {"p", "base", "ambient", "embedding": rows of the dim G x dim S matrix}
/// or {"p", "base", "ambient", "embed": "canonical"|"identity"} with catalog
/// names.
template <class S>
SLie<S> slie_from_json(const Json& j) {
  if (!j.contains("base") || !j.contains("ambient")) throw InputError("S-structure needs 'base' and 'ambient'");
  auto base = algebra_from_json<S>(j.at("base"));
  auto ambient = algebra_from_json<S>(j.at("ambient"));
  if (j.contains("embed")) {
    if (!j.at("base").is_string() || !j.at("ambient").is_string())
      throw InputError("named Lie embeddings need catalog names");
    return SLie<S>(std::move(base), std::move(ambient),
                   lie_embedding<S>(parse_lie_name(j.at("base").get<std::string>()),
                                    parse_lie_name(j.at("ambient").get<std::string>()), j.at("embed").get<std::string>()));
  }
  if (!j.contains("embedding") || !j.at("embedding").is_array()) throw InputError("S-structure needs an embedding");
  const auto& rows = j.at("embedding");
  if (static_cast<Index>(rows.size()) != ambient.dim())
    throw InputError("embedding needs one row per basis vector of the ambient algebra");
  Matrix<S> phi(ambient.dim(), base.dim());
  for (Index r = 0; r < ambient.dim(); ++r) phi.row(r) = vector_from_json<S>(rows[static_cast<std::size_t>(r)], base.dim()).transpose();
  return SLie<S>(std::move(base), std::move(ambient), std::move(phi));
}

template <class S>
Json vector_json(const Vector<S>& v) {
  Json a = Json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(FieldTraits<S>::to_integer(v(i)));
  return a;
}

template <class S>
Json subspace_json(const Subspace<S>& s) {
  Json rows = Json::array();
  for (Index i = 0; i < s.dim(); ++i) rows.push_back(vector_json<S>(s.basis_vector(i)));
  return {{"dim", s.dim()}, {"basis", std::move(rows)}};
}

template <class S>
Json lie_spectrum_json(const SLie<S>& x, const LieSpectrum<S>& s) {
  Json j;
  j["field"] = FieldTraits<S>::name();
  j["baseDim"] = x.base().dim();
  j["ambientDim"] = x.ambient().dim();
  j["ideals"] = s.ideals.size();
  j["size"] = s.size();
  Json pts = Json::array();
  for (std::size_t p = 0; p < s.size(); ++p) pts.push_back(subspace_json(s.point(p)));
  j["points"] = std::move(pts);
  Json closed = Json::array();
  for (const auto& c : s.basicClosed) closed.push_back(c.members());
  j["basicClosedSets"] = std::move(closed);
  j["specialization"] = s.specialization;
  return j;
}

}  // namespace groupspec::lie
