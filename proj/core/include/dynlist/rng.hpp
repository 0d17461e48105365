#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace dynlist {

/// SplitMix64 finalizer.
[[nodiscard]] constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed of the named sub-stream of `seed`. All randomness in a run derives
/// from one user seed through these streams ("scenario", "sampling", ...).
[[nodiscard]] constexpr std::uint64_t substream_seed(std::uint64_t seed,
                                                     std::string_view name) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return mix64(seed ^ mix64(h));
}

using Rng = std::mt19937_64;

[[nodiscard]] inline Rng make_rng(std::uint64_t seed, std::string_view stream) {
  return Rng(substream_seed(seed, stream));
}

/// Uniform double in [0, 1) built from the raw engine output, so results do
/// not depend on the standard library's distribution implementations.
[[nodiscard]] inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, bound).
[[nodiscard]] inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  return bound == 0 ? 0 : static_cast<std::uint64_t>(uniform01(rng) * static_cast<double>(bound));
}

}  // namespace dynlist
