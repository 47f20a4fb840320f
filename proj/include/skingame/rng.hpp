#pragma once

#include <cstdint>
#include <random>

namespace skingame {

using Rng = std::mt19937_64;

// SplitMix64 finalizer. Used to derive independent stream seeds.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Seed of stream `index` under master seed `master`. Depends only on the pair,
// so ensembles can be evaluated in any order.
constexpr std::uint64_t stream_seed(std::uint64_t master,
                                    std::uint64_t index) noexcept {
  return mix64(mix64(master) ^ mix64(index + 0x632be59bd9b4e019ULL));
}

// Uniform on the open interval (0, 1) with 53 bits of resolution.
inline double uniform_open(Rng& rng) {
  constexpr double kScale = 1.0 / 9007199254740992.0;  // 2^-53
  return (static_cast<double>(rng() >> 11) + 0.5) * kScale;
}

// Box-Muller, one variate per call. Deterministic across standard libraries.
double standard_normal(Rng& rng);

}  // namespace skingame
