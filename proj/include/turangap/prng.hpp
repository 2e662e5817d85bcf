#pragma once
// Seed mixing shared by everything that derives per-task generators from a
// user-facing seed. Raw seeds like 0, 1, 2 are too correlated to hand to
// mt19937_64 directly; one splitmix64 round scrambles them.

#include <cstdint>
#include <random>

namespace turangap {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform draw from [0, n) by rejection; unbiased and stable across
// platforms, unlike uniform_int_distribution.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % n;
  std::uint64_t v = rng();
  while (v >= limit) v = rng();
  return v % n;
}

}  // namespace turangap
