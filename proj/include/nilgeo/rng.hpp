#pragma once

#include <cmath>
#include <cstdint>
#include <random>

// Deterministic random streams. The generator is std::mt19937_64, whose
// output sequence is pinned by the standard, seeded through SplitMix64 so
// that (seed, draw_index) pairs give independent streams. Gaussian draws
// use an explicit Box-Muller transform instead of std::normal_distribution
// because the latter's algorithm is implementation-defined.
namespace nilgeo::rng {

inline std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Stream-splitting rule: sub-seed for (seed, index).
inline std::uint64_t mix(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t s = seed ^ (0x9E3779B97F4A7C15ull * (index + 1));
  std::uint64_t a = splitmix64(s);
  std::uint64_t b = splitmix64(s);
  return a ^ (b << 1);
}

inline std::mt19937_64 stream(std::uint64_t seed, std::uint64_t draw_index) {
  return std::mt19937_64(mix(seed, draw_index));
}

// Uniform in (0, 1] from the top 53 bits; never zero so log() is safe.
inline double uniform01(std::mt19937_64& g) {
  return (static_cast<double>(g() >> 11) + 1.0) * 0x1.0p-53;
}

inline double gaussian(std::mt19937_64& g) {
  constexpr double two_pi = 6.283185307179586476925287;
  double u1 = uniform01(g);
  double u2 = uniform01(g);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
}

}  // namespace nilgeo::rng
