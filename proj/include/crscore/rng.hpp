#pragma once

#include <cstdint>

namespace crscore::rng {

// Counter-based uniform stream built on the SplitMix64 finalizer
// (Steele, Lea & Flood 2014). stream_u64(seed, i) is the i-th output of
// sequential SplitMix64 seeded with `seed`, so workers that draw by index
// reproduce the sequential stream exactly, in any order.

inline constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

inline constexpr std::uint64_t finalize(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t stream_u64(std::uint64_t seed,
                                          std::uint64_t index) {
  return finalize(seed + (index + 1) * kGamma);
}

// Uniform double in [0, 1) from the top 53 bits; exact on IEEE doubles.
inline constexpr double to_unit(std::uint64_t u) {
  return static_cast<double>(u >> 11) * 0x1.0p-53;
}

inline constexpr double stream_uniform(std::uint64_t seed,
                                       std::uint64_t index) {
  return to_unit(stream_u64(seed, index));
}

// Sequential view of the same stream, for code that draws a variable
// number of values.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t next_u64() { return stream_u64(seed_, index_++); }
  double next_uniform() { return to_unit(next_u64()); }

  // Derive an independent child seed, e.g. one per work item.
  std::uint64_t fork() { return next_u64(); }

 private:
  std::uint64_t seed_;
  std::uint64_t index_ = 0;
};

}  // namespace crscore::rng
