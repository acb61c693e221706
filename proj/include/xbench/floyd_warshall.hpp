#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "xbench/rng.hpp"

namespace xbench {

using Weight = std::int64_t;

// Sentinel for "no edge". Two sentinels still add without overflow.
inline constexpr Weight kInfinity = std::int64_t{1} << 61;
// Finite weights are capped so that any simple path sum stays below kInfinity.
inline constexpr Weight kMaxFiniteWeight = std::int64_t{1} << 40;

// Square adjacency matrix, row-major, zero diagonal.
class DenseGraph {
 public:
  // n vertices, no edges.
  explicit DenseGraph(std::size_t n);
  // Validates shape, diagonal and weight range.
  DenseGraph(std::size_t n, std::vector<Weight> weights);

  std::size_t size() const noexcept { return n_; }
  Weight at(std::size_t i, std::size_t j) const noexcept { return w_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, Weight w);

  std::span<const Weight> weights() const noexcept { return w_; }
  std::span<Weight> mutable_weights() noexcept { return w_; }

  bool operator==(const DenseGraph&) const = default;

 private:
  std::size_t n_;
  std::vector<Weight> w_;
};

// All-pairs shortest distances by the k/i/j triple loop. Unreachable pairs stay kInfinity.
DenseGraph floyd_warshall(DenseGraph g);

// In-place variant used by the benchmark loop.
void floyd_warshall_inplace(DenseGraph& g);

// Complete directed graph with weights uniform in [1, max_weight].
DenseGraph random_complete_graph(std::size_t n, Weight max_weight, Rng& rng);

}  // namespace xbench
