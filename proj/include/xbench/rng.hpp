#pragma once

#include <cstdint>

namespace xbench {

// xorshift64* generator. The seed is scrambled through one splitmix64 step so
// that small or zero seeds still give a non-degenerate state. The stream is
// defined purely in 64-bit integer arithmetic and is identical on every target.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) noexcept : state_(scramble(seed)) {}

  std::uint64_t next_u64() noexcept {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1DULL;
  }

  // Uniform in [lo, hi). Requires lo < hi and hi - lo <= 2^32.
  std::int64_t next_int(std::int64_t lo, std::int64_t hi) noexcept {
    const auto range = static_cast<std::uint64_t>(hi - lo);
    return lo + static_cast<std::int64_t>(((next_u64() >> 32) * range) >> 32);
  }

  // Uniform in [0, 1) with 53 bits of resolution.
  double next_double() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  std::uint64_t state() const noexcept { return state_; }

 private:
  static std::uint64_t scramble(std::uint64_t seed) noexcept {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z != 0 ? z : 0x9E3779B97F4A7C15ULL;
  }

  std::uint64_t state_;
};

}  // namespace xbench
