#pragma once

// Reproducible generator shared by every randomized component.
//
// Seeding: state = splitmix64(seed), replaced by 0x9E3779B97F4A7C15 if that
// is zero. Step: xorshift64* with shifts (12, 25, 27) and multiplier
// 0x2545F4914F6CDD1D, returning state * multiplier.
//
// uniform(k) draws x until x < 2^64 - (2^64 mod k) and returns x mod k, so
// the index is exactly uniform and reproducible in any language.

#include <cstdint>
#include <limits>

namespace capset {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

class Xorshift64Star {
 public:
  using result_type = std::uint64_t;

  explicit constexpr Xorshift64Star(std::uint64_t seed)
      : state_(splitmix64(seed)) {
    if (state_ == 0) state_ = 0x9E3779B97F4A7C15ull;
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  constexpr result_type operator()() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1Dull;
  }

  // Uniform in [0, k); k must be positive.
  constexpr std::uint64_t uniform(std::uint64_t k) {
    const std::uint64_t limit = max() - (max() % k + 1) % k;
    std::uint64_t x = (*this)();
    while (x > limit) x = (*this)();
    return x % k;
  }

 private:
  std::uint64_t state_;
};

}  // namespace capset
