#pragma once

#include <cstddef>

namespace wg {

/// Default cap on the length of canonical Coxeter words.
inline constexpr int kDefaultLengthCap = 16;

/// Default number of witnesses recorded per failed check.
inline constexpr std::size_t kDefaultMaxWitnesses = 5;

/// Budget for element enumerations (Coxeter elements, matrix groups).
/// Reads WG_MAX_ELEMENTS once; falls back to 200000.
std::size_t element_budget();

/// Budget for explicit tables (groupoid composition, group multiplication).
/// Defaults to 64 * element_budget().
std::size_t table_budget();

} // namespace wg
