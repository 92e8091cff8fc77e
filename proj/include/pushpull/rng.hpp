#ifndef PUSHPULL_RNG_HPP
#define PUSHPULL_RNG_HPP

#include <cstdint>
#include <random>

namespace pushpull {

// r-th output of SplitMix64 (Steele, Lea & Vigna) started at `seed`.
// This is the per-replication stream derivation: replication r of a
// Monte Carlo run is seeded with mixSeed(seed, r), so the mapping from
// (seed, r) to the random stream is part of the reproducibility
// contract and independent of thread scheduling.
constexpr std::uint64_t mixSeed(std::uint64_t seed, std::uint64_t r) {
  std::uint64_t z = seed + (r + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Identifies the generator pipeline in serialized reports.
inline const char* rngStamp() { return "splitmix64+mt19937_64"; }

// mt19937_64 behind a fixed 53-bit uniform mapping. The standard pins
// down the engine's output sequence exactly, and the (x >> 11) * 2^-53
// mapping avoids the implementation-defined std::uniform_real_distribution,
// so streams are bit-identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t nextU64() { return engine_(); }

  // Uniform on [0, 1), 53 random bits, one engine call.
  double nextUnit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace pushpull

#endif
