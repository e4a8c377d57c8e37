#pragma once

#include <cstdint>
#include <random>

namespace fcs {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Derives an independent stream seed from a master seed and up to two
/// indices (e.g. sweep cell and trial), so that parallel scheduling cannot
/// change which random numbers a trial sees.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                                 std::uint64_t b = 0) {
  return splitmix64(splitmix64(splitmix64(master) ^ a) ^ b);
}

/// mt19937_64 with hand-rolled integer/real draws. The engine's output
/// sequence is fixed by the standard; the standard library distributions are
/// not, so we avoid them to keep results identical across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Unbiased uniform draw from [0, bound). bound must be > 0.
  std::uint64_t below(std::uint64_t bound) {
    // rejection sampling on the top of the range
    std::uint64_t threshold = -bound % bound;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  bool bernoulli(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace fcs
