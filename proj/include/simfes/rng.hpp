#pragma once

#include <cstdint>

namespace simfes {

// splitmix64: stable across platforms, used for all seed derivation and
// residue sampling so equal seeds give bit-identical artifacts.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform-ish value in [0, bound); bound > 0. Modulo bias is irrelevant
  // at the failure probabilities involved here.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  SplitMix64 s(a ^ (0x9e3779b97f4a7c15ull + (b << 1)));
  s.next();
  return s.next() ^ b;
}

} // namespace simfes
