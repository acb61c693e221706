#include "xbench/floyd_warshall.hpp"

#include <string>

#include "xbench/errors.hpp"

namespace xbench {

namespace {

void check_weight(Weight w, std::size_t i, std::size_t j) {
  if (w == kInfinity) return;
  if (w < 0 || w > kMaxFiniteWeight) {
    raise<DomainError>("weight out of range at (" + std::to_string(i) + ", " +
                       std::to_string(j) + ")");
  }
}

}  // namespace

DenseGraph::DenseGraph(std::size_t n) : n_(n), w_(n * n, kInfinity) {
  for (std::size_t i = 0; i < n; ++i) w_[i * n + i] = 0;
}

DenseGraph::DenseGraph(std::size_t n, std::vector<Weight> weights)
    : n_(n), w_(std::move(weights)) {
  if (w_.size() != n * n) {
    raise<ShapeError>("DenseGraph: expected " + std::to_string(n * n) + " weights, got " +
                      std::to_string(w_.size()));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Weight w = w_[i * n + j];
      if (i == j && w != 0) raise<DomainError>("DenseGraph: non-zero diagonal at " + std::to_string(i));
      check_weight(w, i, j);
    }
  }
}

void DenseGraph::set(std::size_t i, std::size_t j, Weight w) {
  if (i >= n_ || j >= n_) raise<ShapeError>("DenseGraph::set: index out of range");
  if (i == j && w != 0) raise<DomainError>("DenseGraph::set: diagonal must stay zero");
  check_weight(w, i, j);
  w_[i * n_ + j] = w;
}

void floyd_warshall_inplace(DenseGraph& g) {
  const std::size_t n = g.size();
  auto w = g.mutable_weights();
  for (std::size_t k = 0; k < n; ++k) {
    const Weight* row_k = &w[k * n];
    for (std::size_t i = 0; i < n; ++i) {
      Weight* row_i = &w[i * n];
      const Weight ik = row_i[k];
      for (std::size_t j = 0; j < n; ++j) {
        const Weight through_k = ik + row_k[j];
        if (row_i[j] > through_k) row_i[j] = through_k;
      }
    }
  }
}

DenseGraph floyd_warshall(DenseGraph g) {
  floyd_warshall_inplace(g);
  return g;
}

DenseGraph random_complete_graph(std::size_t n, Weight max_weight, Rng& rng) {
  if (max_weight < 1 || max_weight > kMaxFiniteWeight) {
    raise<DomainError>("random_complete_graph: max_weight out of range");
  }
  DenseGraph g(n);
  auto w = g.mutable_weights();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) w[i * n + j] = rng.next_int(1, max_weight + 1);
    }
  }
  return g;
}

}  // namespace xbench
