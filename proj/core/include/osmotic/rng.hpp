#pragma once

#include <cstdint>
#include <random>

namespace osmotic {

// SplitMix64 mixing step. Used to derive independent, reproducible streams
// from a base seed and a stream index.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t stream_index) {
  return splitmix64(splitmix64(seed) ^ splitmix64(stream_index + 0x51ed270b7a64b1a5ULL));
}

// Uniform draws built directly from raw 64-bit generator output so sequences
// are identical across standard libraries (std distributions are not pinned).
inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_double(std::mt19937_64& rng, double lo, double hi) {
  return lo + uniform_unit(rng) * (hi - lo);
}

inline std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<double>(hi - lo + 1);
  auto v = lo + static_cast<std::int64_t>(uniform_unit(rng) * span);
  return v > hi ? hi : v;
}

}  // namespace osmotic
