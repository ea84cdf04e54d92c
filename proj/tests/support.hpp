#pragma once

#include <optional>

#include "apnforge/compatibility.hpp"
#include "apnforge/hexanomial.hpp"

namespace apnforge::testing {

/// Hexanomial over make_field(2m) with the default d. c defaults to the first
/// compatible c when one exists, otherwise 0.
inline BCParams params_for(unsigned m, unsigned n, std::optional<std::uint64_t> c_bits = {}) {
  const Field f = make_field(2 * m);
  Element c = f.zero();
  if (c_bits) {
    c = f.element(*c_bits);
  } else if (const auto found = find_c(CompatContext(f, m, n))) {
    c = *found;
  }
  return BCParams(f, m, n, c, default_d(f, m));
}

}  // namespace apnforge::testing
