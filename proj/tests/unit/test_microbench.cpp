#include "doctest.h"
#include "oracles.hpp"
#include "xbench/errors.hpp"
#include "xbench/microbench.hpp"

using namespace xbench;

TEST_SUITE("microbench") {

TEST_CASE("fill_array_rand of one element is that element") {
  Rng gen(0);
  const auto first = static_cast<std::uint64_t>(gen.next_int(0, kRandomIntLimit));
  Rng rng(0);
  CHECK(fill_array_rand(1, rng) == first);
  CHECK(first == 1037982214u);
}

TEST_CASE("fill_array_rand golden at paper scale") {
  Rng rng(42);
  CHECK(fill_array_rand(1'000'000, rng) == 1073077667933973ULL);
}

TEST_CASE("fill_array_rand is deterministic") {
  Rng a(7);
  Rng b(7);
  CHECK(fill_array_rand(10, a) == fill_array_rand(10, b));
}

TEST_CASE("fill_array_rand sum is bounded by n * 2^31") {
  Rng rng(5);
  const std::uint64_t n = 1000;
  CHECK(fill_array_rand(n, rng) < n * static_cast<std::uint64_t>(kRandomIntLimit));
}

TEST_CASE("fill_array_rand rejects bad sizes") {
  Rng rng(1);
  CHECK_THROWS_AS(fill_array_rand(0, rng), DomainError);
  CHECK_THROWS_AS(fill_array_rand((std::uint64_t{1} << 32) + 1, rng), ResourceError);
}

TEST_CASE("fib_recursive base cases") {
  CHECK(fib_recursive(0) == 0);
  CHECK(fib_recursive(1) == 1);
}

TEST_CASE("fib_recursive matches the iterative oracle") {
  CHECK(fib_recursive(10) == oracle::fib_iterative(10));
  CHECK(oracle::fib_iterative(10) == 55);
  for (unsigned n = 0; n <= 30; ++n) CHECK(fib_recursive(n) == oracle::fib_iterative(n));
  CHECK(fib_recursive(40) == oracle::fib_iterative(40));
}

TEST_CASE("fib_recursive domain") {
  CHECK_THROWS_AS(fib_recursive(61), DomainError);
  CHECK(oracle::fib_iterative(60) == 1548008755920ULL);
}

TEST_CASE("int_compare tallies partition the pair count") {
  Rng rng(42);
  const auto t = int_compare(10'000'000, rng);
  CHECK(t.total() == 10'000'000);
}

TEST_CASE("int_compare golden") {
  Rng rng(1);
  const auto t = int_compare(100, rng);
  CHECK(t.less == 50);
  CHECK(t.equal == 0);
  CHECK(t.greater == 50);
}

TEST_CASE("int_compare is deterministic") {
  Rng a(3);
  Rng b(3);
  CHECK(int_compare(5000, a) == int_compare(5000, b));
}

TEST_CASE("int_compare rejects zero pairs") {
  Rng rng(1);
  CHECK_THROWS_AS(int_compare(0, rng), DomainError);
}

}
