// Deterministic pseudo-random generator for seeded sampling.
//
// The standard distributions are implementation-defined, so seeded runs and
// frozen test expectations would not be portable across standard libraries.
// splitmix64 is tiny and produces the same stream everywhere.

#ifndef SPINTOR_RNG_HPP_
#define SPINTOR_RNG_HPP_

#include <cstdint>

namespace spintor {

struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform draw in [0, bound); bound > 0.  Fixed-point multiply keeps the
  // residual bias below 2^-64, which is irrelevant at our sample sizes.
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }
};

} // namespace spintor

#endif // SPINTOR_RNG_HPP_
