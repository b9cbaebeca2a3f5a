#pragma once

#include "tomex/rational.hpp"

namespace tomex {

// Bernoulli number B_n in the convention B_1 = -1/2, i.e. the coefficients of
// z/(e^z - 1).  Values are computed once up to a fixed cap and cached.
const Rat& bernoulli(unsigned n);

// Largest index served by the cache.
constexpr unsigned bernoulli_cache_max = 64;

} // namespace tomex
