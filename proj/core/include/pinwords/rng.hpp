#pragma once

#include <cstdint>
#include <random>

namespace pinwords {

// Unbiased draw of an integer in [0, n) via rejection sampling.
//
// std::mt19937_64 output is pinned down by the standard, but
// std::uniform_int_distribution is not, so seeded results would differ
// between standard libraries. Sampling by hand keeps every seeded
// sequence reproducible everywhere.
inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % n;
  std::uint64_t value;
  do {
    value = rng();
  } while (value >= limit);
  return value % n;
}

}  // namespace pinwords
