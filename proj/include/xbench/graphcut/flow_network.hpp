#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace xbench::graphcut {

using Capacity = std::int64_t;
using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using ArcId = std::uint32_t;

inline constexpr ArcId kNoArc = 0xFFFFFFFFu;

struct Edge {
  VertexId from;
  VertexId to;
  Capacity capacity;

  bool operator==(const Edge&) const = default;
};

// Directed capacitated graph with distinguished source and sink.
//
// Every edge e owns two residual arcs: 2e runs from -> to and starts with the
// edge's capacity, 2e+1 runs to -> from and starts at zero. Pushing d units
// along an arc moves d units of residual onto its sister (a ^ 1). The flow on
// edge e is therefore residual(2e + 1).
class FlowNetwork {
 public:
  // Throws DomainError if source == sink or either is out of range.
  FlowNetwork(std::size_t vertex_count, VertexId source, VertexId sink);

  // Throws DomainError on a negative capacity, self-loop or bad vertex id.
  EdgeId add_edge(VertexId from, VertexId to, Capacity capacity);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t arc_count() const noexcept { return residual_.size(); }
  VertexId source() const noexcept { return source_; }
  VertexId sink() const noexcept { return sink_; }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const noexcept { return edges_; }

  static constexpr ArcId forward_arc(EdgeId e) noexcept { return 2 * e; }
  static constexpr ArcId sister(ArcId a) noexcept { return a ^ 1u; }
  static constexpr EdgeId edge_of(ArcId a) noexcept { return a / 2; }

  VertexId arc_tail(ArcId a) const noexcept {
    const Edge& e = edges_[edge_of(a)];
    return (a & 1u) ? e.to : e.from;
  }
  VertexId arc_head(ArcId a) const noexcept {
    const Edge& e = edges_[edge_of(a)];
    return (a & 1u) ? e.from : e.to;
  }

  Capacity residual(ArcId a) const noexcept { return residual_[a]; }
  Capacity flow(EdgeId e) const noexcept { return residual_[forward_arc(e) + 1]; }

  // Requires 0 <= delta <= residual(a).
  void push(ArcId a, Capacity delta) noexcept {
    residual_[a] -= delta;
    residual_[sister(a)] += delta;
  }

  // Restores every residual to the zero-flow state.
  void reset_flow() noexcept;

  // Same vertices, terminals and edge list; residuals are ignored.
  bool same_structure(const FlowNetwork& other) const noexcept;

  // Net flow out of v (out minus in) over all edges.
  Capacity net_outflow(VertexId v) const noexcept;

 private:
  std::size_t vertex_count_;
  VertexId source_;
  VertexId sink_;
  std::vector<Edge> edges_;
  std::vector<Capacity> residual_;
};

enum class Side : std::uint8_t { source, sink };

struct CutResult {
  Capacity max_flow = 0;
  std::vector<Side> side;          // one entry per vertex
  std::vector<EdgeId> cut_edges;   // source side -> sink side, all saturated
  Capacity cut_cost = 0;
};

// Sum of capacities of edges leaving the source side for the sink side.
// Throws ShapeError if side has the wrong length and DomainError if the
// terminals share a side.
Capacity cut_cost(const FlowNetwork& net, std::span<const Side> side);

}  // namespace xbench::graphcut
