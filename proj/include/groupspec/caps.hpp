#pragma once

#include <cstddef>
#include <cstdint>

namespace groupspec {

/// Size limits for exhaustive searches. All of them are configuration.
struct Caps {
  std::size_t maxGroupOrder = 10080;
  std::size_t maxAutomorphismOrder = 720;
  std::size_t maxClasses = 64;
  std::size_t maxSections = 1'000'000;
  std::size_t maxSolutionSpace = 10'000'000;
  // p^dim bound for subspace-lattice enumeration.
  std::size_t maxLieVectors = 15625;
  std::size_t associativityExhaustiveLimit = 512;
  std::size_t associativitySamples = 10'000;
  std::uint64_t seed = 0;
};

/// Default caps, with GROUPSPEC_MAX_ORDER applied when set.
Caps caps_from_environment();

}  // namespace groupspec
