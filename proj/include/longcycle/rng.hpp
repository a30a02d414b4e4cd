#pragma once

#include <cstdint>
#include <random>

namespace longcycle {

/// Master seed plus the rule for deriving independent streams from it.
///
/// Streams are addressed by a path of 64-bit indices, e.g. (master, trial)
/// or (master, trial, attempt). Identical paths give identical bits.
struct Seed {
  std::uint64_t master = 0;

  /// Seed of the child stream `index` of this seed.
  [[nodiscard]] Seed derive(std::uint64_t index) const;

  friend bool operator==(const Seed&, const Seed&) = default;
};

/// SplitMix64 finalizer; a bijective 64-bit mix.
[[nodiscard]] std::uint64_t mix64(std::uint64_t x);

/// 64-bit Mersenne Twister keyed by a Seed. Satisfies
/// UniformRandomBitGenerator, so it plugs into <random> and std::shuffle.
class Rng {
 public:
  using result_type = std::mt19937_64::result_type;

  explicit Rng(Seed seed) : engine_(mix64(seed.master)) {}

  static constexpr result_type min() { return std::mt19937_64::min(); }
  static constexpr result_type max() { return std::mt19937_64::max(); }

  result_type operator()() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(engine_);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace longcycle
