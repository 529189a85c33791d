#pragma once

#include <cstdint>

#include "affdimer/rational.hpp"

namespace affdimer {

/// Denominator of sampled offsets (the prime 2^31 - 1).
inline constexpr std::int64_t kOffsetDenominator = 2147483647;

/// SplitMix64 stream. Cheap to seed, so every trial gets its own.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % bound;
  }

  /// Uniform offset k / (2^31 - 1), k in [0, 2^31 - 1).
  Rational offset() { return Rational(static_cast<std::int64_t>(below(kOffsetDenominator)), kOffsetDenominator); }

 private:
  std::uint64_t state_;
};

/// Seed of stream `index` under master seed `seed`; independent of how
/// streams are distributed over workers.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 a(seed);
  const std::uint64_t base = a.next();
  SplitMix64 b(base ^ (index * 0xd1342543de82ef95ULL + 0x632be59bd9b4e019ULL));
  return b.next();
}

}  // namespace affdimer
