#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace fuzzycorner::detail {

// Uniform draw in [0, bound) from raw engine output, independent of the standard
// library's distribution implementation.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  constexpr auto max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % bound;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(bounded(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

}  // namespace fuzzycorner::detail
