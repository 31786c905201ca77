#pragma once

#include <vector>

#include "mckay/engine.hpp"

namespace mckay::engine {

// Irreducible character degrees by Dixon's class-algebra method, sorted
// ascending. Exact arithmetic modulo a prime p > |g| with p = 1 mod
// exponent(g). Requires |g| <= 5000.
std::vector<long> dixon_degrees(const ConcreteGroup& g);

}  // namespace mckay::engine
