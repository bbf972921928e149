#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "stringcone/rational.hpp"

namespace stringcone {

/// Derives an independent stream seed from a base seed and a label, so each
/// randomized stage of a pipeline draws from its own deterministic stream.
inline std::uint64_t mixSeed(std::uint64_t seed, const std::string& label) {
  std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ULL;
  for (unsigned char c : label) {
    h ^= c;
    h *= 0x100000001b3ULL;
    h ^= h >> 29;
  }
  return h;
}

/// Deterministic random source for seeded sampling. Ranges are produced by
/// modular reduction so results depend only on the engine stream, not on a
/// library's distribution implementation.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t nextU64() { return eng_(); }

  /// Uniform-ish integer in [lo, hi] (inclusive).
  long nextInt(long lo, long hi) {
    if (hi < lo) throw std::invalid_argument("SeededRng: empty range");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(eng_() % span);
  }

  /// Positive rational with numerator in [1, maxNum] and denominator in
  /// [1, maxDen].
  Rational nextPositiveRational(long maxNum, long maxDen) {
    return Rational(nextInt(1, maxNum), nextInt(1, maxDen));
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace stringcone
