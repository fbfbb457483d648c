#pragma once

#include <cstdint>

namespace petdom {

/// SplitMix64. The generator, the modulo draw below, and the Fisher-Yates
/// shuffle in the solver are the documented randomness contract: a fixed
/// seed reproduces identical output on any platform.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform-ish draw in [0, bound) by modulo reduction.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

}  // namespace petdom
