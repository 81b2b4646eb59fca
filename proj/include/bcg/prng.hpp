#pragma once

#include <cstdint>

namespace bcg {

/// Portable generator used for every seeded choice in the project.
///
/// State initialisation: state = splitmix64(seed), where
///   z  = seed + 0x9E3779B97F4A7C15
///   z  = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z  = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   state = z ^ (z >> 31)
/// and a zero result is replaced by 0x9E3779B97F4A7C15.
///
/// Step (xorshift64*, shifts 12/25/27):
///   x ^= x >> 12; x ^= x << 25; x ^= x >> 27; state = x;
///   output = x * 0x2545F4914F6CDD1D
///
/// All arithmetic is modulo 2^64. `below(n)` is `next() % n` and
/// `uniform()` is `(next() >> 11) * 2^-53`; both are trivially portable.
class Xorshift64Star {
 public:
  explicit Xorshift64Star(std::uint64_t seed) noexcept {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    state_ = z ^ (z >> 31);
    if (state_ == 0) state_ = 0x9E3779B97F4A7C15ULL;
  }

  std::uint64_t next() noexcept {
    std::uint64_t x = state_;
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    state_ = x;
    return x * 0x2545F4914F6CDD1DULL;
  }

  /// Integer in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n) noexcept { return next() % n; }

  /// Double in [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

}  // namespace bcg
