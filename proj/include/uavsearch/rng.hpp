#ifndef UAVSEARCH_RNG_HPP
#define UAVSEARCH_RNG_HPP

#include <cstdint>
#include <random>

namespace uavsearch {

using Rng = std::mt19937_64;

/// Uniform draw in [0, 1) built from the top 53 bits, so streams are
/// reproducible across standard library implementations.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline bool bernoulli(Rng& rng, double p) { return uniform01(rng) < p; }

/// SplitMix64 finalizer.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Independent stream for a (seed, purpose) pair.
inline Rng make_stream(std::uint64_t seed, std::uint32_t purpose) {
  return Rng(mix64(mix64(seed) ^ (static_cast<std::uint64_t>(purpose) << 32 | purpose)));
}

}  // namespace uavsearch

#endif  // UAVSEARCH_RNG_HPP
