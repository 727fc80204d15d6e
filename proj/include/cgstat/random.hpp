#pragma once

#include <cstdint>
#include <random>

namespace cgstat {

// Uniform integer in [0, bound) by rejection; unlike
// std::uniform_int_distribution the stream is identical on every platform.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
  for (;;) {
    std::uint64_t x = rng();
    if (x <= limit) return x % bound;
  }
}

// Independent stream for chunk c of a run seeded with seed.
inline std::mt19937_64 substream(std::uint64_t seed, std::uint64_t chunk) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32), 0x9e3779b9u};
  return std::mt19937_64(seq);
}

}  // namespace cgstat
