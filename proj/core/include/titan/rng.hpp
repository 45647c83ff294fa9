#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace titan {

/// Deterministic 64-bit random stream. Bounded draws use rejection sampling
/// on the raw engine output, so results depend only on the engine (whose
/// output sequence the standard pins down), not on any library
/// distribution implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Unbiased uniform draw in [0, bound). bound must be positive.
  std::uint64_t uniform_below(std::uint64_t bound) {
    const std::uint64_t threshold = (-bound) % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller (keeps all randomness in this engine).
  double gaussian() {
    double u1 = uniform01();
    if (u1 < 0x1.0p-60) u1 = 0x1.0p-60;
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
  }

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer; good avalanche for cheap seed derivation.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Derive an independent stream seed from a master seed and a stream index.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return splitmix64(splitmix64(master) ^ splitmix64(stream * 0x9e3779b97f4a7c15ull + 1));
}

/// Per-node stream: distinct nodes get independent, reproducible streams.
inline Rng seed_node_rng(std::uint64_t master_seed, int node_id) {
  return Rng(derive_seed(master_seed, static_cast<std::uint64_t>(node_id)));
}

}  // namespace titan
