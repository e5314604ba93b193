#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace prs {

// Deterministic substream seeding. Every randomized component derives its
// generator from (seed, tag, indices...) so results are reproducible and
// independent of call order elsewhere in the program.

inline std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 0xcbf29ce484222325ULL) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::uint64_t mix64(std::uint64_t x) {
  // splitmix64 finalizer
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t combine(std::uint64_t a, std::uint64_t b) {
  return mix64(a ^ mix64(b));
}

inline std::mt19937_64 substream(std::uint64_t seed, std::string_view tag,
                                 std::uint64_t i = 0, std::uint64_t j = 0) {
  std::uint64_t h = combine(combine(seed, fnv1a(tag)), combine(i, j));
  return std::mt19937_64(h);
}

// Distribution helpers with pinned arithmetic (libstdc++ distributions are
// implementation-defined; these are not).

inline double uniform01(std::mt19937_64& g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& g, double lo, double hi) {
  return lo + (hi - lo) * uniform01(g);
}

inline std::uint64_t uniform_index(std::mt19937_64& g, std::uint64_t n) {
  // rejection sampling; unbiased
  std::uint64_t lim = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = g();
  } while (x >= lim);
  return x % n;
}

inline double normal(std::mt19937_64& g, double mean = 0.0, double stddev = 1.0) {
  // Box-Muller, one value per call (second value discarded for simplicity)
  double u1 = uniform01(g);
  double u2 = uniform01(g);
  while (u1 <= 0.0) u1 = uniform01(g);
  double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  return mean + stddev * z;
}

}  // namespace prs
