#pragma once

#include <cstdint>
#include <random>

namespace shellbound {

/// splitmix64 step; used to derive independent stream seeds.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return mix64(mix64(seed) ^ (stream + 0xD1B54A32D192ED03ull));
}

/// Uniform double sampler over mt19937_64. Doubles come from the top 53 bits
/// directly, so identical seeds give identical streams on every platform
/// (std::uniform_real_distribution makes no such promise).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t bits() { return eng_(); }

  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double range(double lo, double hi) { return lo + (hi - lo) * unit(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace shellbound
