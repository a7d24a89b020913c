#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace cubsched {

/// All randomized routines draw from mt19937_64 through the two helpers
/// below.  std::uniform_int_distribution and std::shuffle are not pinned
/// down by the standard, so results would not be reproducible across
/// library implementations; these are.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  // rejection sampling to avoid modulo bias
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

template <typename T>
void fisher_yates(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(uniform_below(rng, i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace cubsched
