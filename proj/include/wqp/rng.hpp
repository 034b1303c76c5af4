#pragma once

#include <cstdint>

#include "wqp/types.hpp"

namespace wqp {

/// SplitMix64 generator.  Chosen over std::mt19937 because its output and
/// our Box-Muller mapping are fully specified, so seeded runs reproduce
/// bit-identically across platforms and standard-library versions.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller (cosine branch only).
  double gaussian();

 private:
  std::uint64_t state_;
};

/// Haar-random ket: d independent standard complex Gaussians, normalized.
Ket haar_random_ket(int d, SplitMix64& rng);
Ket haar_random_ket(int d, std::uint64_t seed);

}  // namespace wqp
