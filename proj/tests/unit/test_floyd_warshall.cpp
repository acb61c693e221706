#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "xbench/errors.hpp"
#include "xbench/floyd_warshall.hpp"

using namespace xbench;

namespace {

DenseGraph random_sparse_graph(std::size_t n, double density, Weight max_weight, Rng& rng) {
  DenseGraph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && rng.next_double() < density) g.set(i, j, rng.next_int(0, max_weight + 1));
    }
  }
  return g;
}

}  // namespace

TEST_SUITE("floyd_warshall") {

TEST_CASE("graph without edges is unchanged") {
  const DenseGraph g(5);
  CHECK(floyd_warshall(g) == g);
}

TEST_CASE("triangle shortcut") {
  DenseGraph g(3);
  g.set(0, 1, 1);
  g.set(1, 2, 1);
  g.set(0, 2, 5);
  const DenseGraph d = floyd_warshall(g);
  CHECK(d.at(0, 2) == 2);
  CHECK(d.at(0, 1) == 1);
  CHECK(d.at(2, 0) == kInfinity);
  CHECK(std::vector<Weight>(d.weights().begin(), d.weights().end()) == oracle::dijkstra_all_sources(g));
}

TEST_CASE("matches Dijkstra on random graphs") {
  Rng rng(2024);
  for (int round = 0; round < 30; ++round) {
    const auto n = static_cast<std::size_t>(rng.next_int(1, 40));
    const DenseGraph g = random_sparse_graph(n, rng.next_double(), 50, rng);
    const DenseGraph d = floyd_warshall(g);
    REQUIRE(std::vector<Weight>(d.weights().begin(), d.weights().end()) ==
            oracle::dijkstra_all_sources(g));
  }
}

TEST_CASE("output properties") {
  Rng rng(11);
  for (int round = 0; round < 10; ++round) {
    const DenseGraph g = random_sparse_graph(25, 0.3, 30, rng);
    const DenseGraph d = floyd_warshall(g);
    CHECK(floyd_warshall(d) == d);
    for (std::size_t i = 0; i < 25; ++i) {
      CHECK(d.at(i, i) == 0);
      for (std::size_t j = 0; j < 25; ++j) {
        REQUIRE(d.at(i, j) <= g.at(i, j));
        for (std::size_t k = 0; k < 25; ++k) {
          if (d.at(i, k) < kInfinity && d.at(k, j) < kInfinity) {
            REQUIRE(d.at(i, j) <= d.at(i, k) + d.at(k, j));
          }
        }
      }
    }
  }
}

TEST_CASE("inplace agrees with the copying variant") {
  Rng rng(3);
  DenseGraph g = random_complete_graph(30, 100, rng);
  const DenseGraph expected = floyd_warshall(g);
  floyd_warshall_inplace(g);
  CHECK(g == expected);
}

TEST_CASE("random_complete_graph weights") {
  Rng rng(8);
  const DenseGraph g = random_complete_graph(20, 100, rng);
  for (std::size_t i = 0; i < 20; ++i) {
    for (std::size_t j = 0; j < 20; ++j) {
      if (i == j) {
        CHECK(g.at(i, j) == 0);
      } else {
        REQUIRE(g.at(i, j) >= 1);
        REQUIRE(g.at(i, j) <= 100);
      }
    }
  }
  Rng again(8);
  CHECK(random_complete_graph(20, 100, again) == g);
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(DenseGraph(3, std::vector<Weight>(8, 0)), ShapeError);
  std::vector<Weight> w(4, 0);
  w[1] = -1;
  CHECK_THROWS_AS(DenseGraph(2, w), DomainError);
  w[1] = 0;
  w[3] = 4;
  CHECK_THROWS_AS(DenseGraph(2, w), DomainError);
  DenseGraph g(2);
  CHECK_THROWS_AS(g.set(0, 1, -3), DomainError);
  CHECK_THROWS_AS(g.set(1, 1, 2), DomainError);
  CHECK_THROWS_AS(g.set(0, 1, kMaxFiniteWeight + 1), DomainError);
}

}
