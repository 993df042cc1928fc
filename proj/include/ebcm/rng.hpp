#pragma once

#include <cstdint>
#include <random>

namespace ebcm {

// Seedable random stream with a fully pinned-down algorithm so that runs are
// bit-reproducible across platforms and standard library implementations.
// The engine is std::mt19937_64 (exactly specified by the C++ standard); the
// double mapping below is ours because std::uniform_real_distribution is not
// portable across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53 random mantissa bits.
  double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  // Fair coin from the top engine bit.
  bool coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

// Derives an independent stream seed from a base seed and a counter.
// One SplitMix64 step (Steele, Lea & Flood); the finalizer scatters
// neighbouring counters far apart in seed space.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + (index + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace ebcm
