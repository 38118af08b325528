#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "groupspec/caps.hpp"
#include "groupspec/io.hpp"

namespace groupspec {

struct VerifyOptions {
  Caps caps;
  /// Catalog sweeps include only G-groups with |H| <= maxOrder. Named
  /// fixtures always run.
  std::size_t maxOrder = 240;
  std::uint64_t seed = 0;
};

struct ScopeInfo {
  std::string name;
  int criterion = 0;
  std::string summary;
};

/// The verify scopes in criterion order.
const std::vector<ScopeInfo>& verify_scopes();
const ScopeInfo* find_scope(const std::string& name);

/// {"scope", "criterion", "pass", "checks", ..., "counterexamples"}.
/// Failures are data; only malformed options throw.
Json verify_scope(const std::string& name, const VerifyOptions& opts);

/// The determinism scope, comparing against reports already computed in
/// this run where available (scope name -> dumped report).
Json verify_determinism(const VerifyOptions& opts, const std::map<std::string, std::string>& firstRun = {});

/// (G, H, embed) triples swept by the catalog-wide scopes, before the order
/// filter.
struct CatalogTriple {
  std::string g, h, embed;
};
const std::vector<CatalogTriple>& catalog_ggroups();

}  // namespace groupspec
