#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace rpg {

using Rng = std::mt19937_64;
using Seed = std::uint64_t;

inline constexpr Seed kDefaultSeed = 20161017;

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Independent stream seed for (master, point, trial, purpose). Streams that
/// differ in any coordinate are decorrelated by the splitmix finalizer.
constexpr Seed derive_seed(Seed master, std::uint64_t point, std::uint64_t trial,
                           std::string_view purpose) {
  std::uint64_t h = splitmix64(master);
  h = splitmix64(h ^ point);
  h = splitmix64(h ^ (trial + 0x632be59bd9b4e019ULL));
  return splitmix64(h ^ fnv1a(purpose));
}

/// Sub-stream for one purpose under an already-derived seed.
constexpr Seed derive_seed(Seed parent, std::string_view purpose) {
  return splitmix64(splitmix64(parent) ^ fnv1a(purpose));
}

}  // namespace rpg
