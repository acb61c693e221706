#pragma once

#include <cstdint>

#include "xbench/rng.hpp"

namespace xbench {

// Upper bound (exclusive) for the random integers of the base tests.
inline constexpr std::int64_t kRandomIntLimit = std::int64_t{1} << 31;

// Largest n whose Fibonacci number fits in 64 bits with headroom.
inline constexpr unsigned kMaxFibonacci = 60;

// Allocates n ints drawn from rng in [0, 2^31), then reads n of them back at
// rng-chosen indices and returns their wrapping sum.
std::uint64_t fill_array_rand(std::uint64_t n, Rng& rng);

// Naive double recursion; F(0) = 0, F(1) = 1. Throws DomainError for n > 60.
std::uint64_t fib_recursive(unsigned n);

struct CompareTally {
  std::uint64_t less = 0;
  std::uint64_t equal = 0;
  std::uint64_t greater = 0;

  std::uint64_t total() const noexcept { return less + equal + greater; }
  bool operator==(const CompareTally&) const = default;
};

// Draws n_pairs (a, b) pairs into two arrays and tallies a <=> b.
CompareTally int_compare(std::uint64_t n_pairs, Rng& rng);

}  // namespace xbench
