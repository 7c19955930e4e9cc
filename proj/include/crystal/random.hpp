#pragma once

// Randomized genericity. Every random draw goes through a stream derived from
// (seed, tag), so results do not depend on evaluation order or thread count.

#include <cstdint>
#include <random>
#include <string_view>

namespace crystal {

using Rng = std::mt19937_64;

struct Genericity {
  std::uint64_t seed = 0x5eed;
  int samples = 5;     // generic-point samples per question
  long range = 1000;   // integer coefficients drawn uniformly from [-range, range]

  // `--paranoid`: ten times the samples and the coefficient range.
  Genericity paranoid() const { return Genericity{seed, samples * 10, range * 10}; }
};

inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline Rng stream(std::uint64_t seed, std::string_view tag) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : tag) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return Rng(mix64(seed ^ mix64(h)));
}

inline long uniform(Rng& rng, long range) {
  return std::uniform_int_distribution<long>(-range, range)(rng);
}

}  // namespace crystal
