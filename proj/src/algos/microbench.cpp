#include "xbench/microbench.hpp"

#include <string>
#include <vector>

#include "xbench/errors.hpp"

namespace xbench {

std::uint64_t fill_array_rand(std::uint64_t n, Rng& rng) {
  if (n == 0) raise<DomainError>("fill_array_rand: n must be at least 1");
  if (n > (std::uint64_t{1} << 32)) {
    raise<ResourceError>("fill_array_rand: refusing to allocate " + std::to_string(n) +
                         " elements");
  }
  std::vector<std::int32_t> values(static_cast<std::size_t>(n));
  for (auto& v : values) v = static_cast<std::int32_t>(rng.next_int(0, kRandomIntLimit));

  std::uint64_t sum = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(rng.next_int(0, static_cast<std::int64_t>(n)));
    sum += static_cast<std::uint64_t>(values[idx]);
  }
  return sum;
}

namespace {

std::uint64_t fib(unsigned n) {
  if (n < 2) return n;
  return fib(n - 1) + fib(n - 2);
}

}  // namespace

std::uint64_t fib_recursive(unsigned n) {
  if (n > kMaxFibonacci) {
    raise<DomainError>("fib_recursive: n = " + std::to_string(n) + " exceeds " +
                       std::to_string(kMaxFibonacci));
  }
  return fib(n);
}

CompareTally int_compare(std::uint64_t n_pairs, Rng& rng) {
  if (n_pairs == 0) raise<DomainError>("int_compare: n_pairs must be at least 1");
  if (n_pairs > (std::uint64_t{1} << 32)) {
    raise<ResourceError>("int_compare: refusing to allocate " + std::to_string(n_pairs) +
                         " pairs");
  }
  const auto n = static_cast<std::size_t>(n_pairs);
  std::vector<std::int32_t> lhs(n);
  std::vector<std::int32_t> rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    lhs[i] = static_cast<std::int32_t>(rng.next_int(0, kRandomIntLimit));
    rhs[i] = static_cast<std::int32_t>(rng.next_int(0, kRandomIntLimit));
  }

  CompareTally tally;
  for (std::size_t i = 0; i < n; ++i) {
    if (lhs[i] < rhs[i]) {
      ++tally.less;
    } else if (lhs[i] == rhs[i]) {
      ++tally.equal;
    } else {
      ++tally.greater;
    }
  }
  return tally;
}

}  // namespace xbench
