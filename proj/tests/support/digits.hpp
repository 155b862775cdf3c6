#pragma once

#include <cmath>

namespace semgraph::testing {

// Agreement to 15 significant digits.
inline bool same_15_digits(double actual, double expected) {
  if (expected == 0.0) return actual == 0.0;
  return std::fabs(actual - expected) <= 5e-15 * std::fabs(expected);
}

}  // namespace semgraph::testing
