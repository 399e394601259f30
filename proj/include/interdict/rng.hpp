#ifndef INTERDICT_RNG_HPP
#define INTERDICT_RNG_HPP

#include <cmath>
#include <cstdint>

namespace interdict {

/// SplitMix64 generator. Small, fast, platform-stable, and splittable:
/// independent streams are derived from (seed, stream_index), so results do
/// not depend on thread scheduling.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static std::uint64_t scramble(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Stream derivation for repetition/stream `index` of a run seeded `seed`.
  static SplitMix64 stream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(scramble(seed + 0x9e3779b97f4a7c15ull * (index + 1)));
  }

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ull;
    return scramble(state_);
  }

  /// Uniform in [0, bound), bound >= 1; rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Exponential arrival time with the given positive rate.
  double exponential(double rate) { return -std::log1p(-unit()) / rate; }

 private:
  std::uint64_t state_;
};

}  // namespace interdict

#endif  // INTERDICT_RNG_HPP
