#include "wg/config.hpp"

#include <cstdlib>
#include <string>

namespace wg {

std::size_t element_budget() {
  static const std::size_t budget = [] {
    const char *env = std::getenv("WG_MAX_ELEMENTS");
    if (env != nullptr && *env != '\0') {
      try {
        auto v = std::stoull(env);
        if (v > 0)
          return static_cast<std::size_t>(v);
      } catch (...) {
      }
    }
    return std::size_t{200000};
  }();
  return budget;
}

std::size_t table_budget() { return 64 * element_budget(); }

} // namespace wg
