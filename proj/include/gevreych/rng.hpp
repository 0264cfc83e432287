#pragma once

#include <cstdint>
#include <string_view>

#include "gevreych/types.hpp"

namespace gevreych {

/// Deterministic 64-bit generator (splitmix64). All randomness in the
/// library flows through this type so that a run is reproducible from a
/// single root seed on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  Real uniform() { return static_cast<Real>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  Real uniform(Real lo, Real hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::uint64_t state_;
};

/// Derives a child seed from a root seed and a label, so independent
/// experiments driven by one config cannot share a stream by accident.
inline std::uint64_t split_seed(std::uint64_t root, std::string_view label) {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ root;
  for (char c : label) {
    h ^= static_cast<std::uint64_t>(static_cast<unsigned char>(c));
    h *= 0x100000001b3ULL;
  }
  return Rng(h).next_u64();
}

inline std::uint64_t split_seed(std::uint64_t root, std::uint64_t index) {
  return Rng(root ^ (0x9e3779b97f4a7c15ULL + index * 0xd1342543de82ef95ULL)).next_u64();
}

}  // namespace gevreych
