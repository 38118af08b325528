#include "groupspec/caps.hpp"

#include <cstdlib>
#include <string>

#include "groupspec/error.hpp"

namespace groupspec {

Caps caps_from_environment() {
  Caps caps;
  if (const char* env = std::getenv("GROUPSPEC_MAX_ORDER"); env && *env) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used != std::string(env).size() || v == 0) throw InputError("");
      caps.maxGroupOrder = static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw InputError(std::string("GROUPSPEC_MAX_ORDER is not a positive integer: ") + env);
    }
  }
  return caps;
}

}  // namespace groupspec
