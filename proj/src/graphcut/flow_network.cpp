#include "xbench/graphcut/flow_network.hpp"

#include <string>

#include "xbench/errors.hpp"

namespace xbench::graphcut {

FlowNetwork::FlowNetwork(std::size_t vertex_count, VertexId source, VertexId sink)
    : vertex_count_(vertex_count), source_(source), sink_(sink) {
  if (source >= vertex_count || sink >= vertex_count) {
    raise<DomainError>("FlowNetwork: terminal id out of range");
  }
  if (source == sink) raise<DomainError>("FlowNetwork: source and sink must differ");
}

EdgeId FlowNetwork::add_edge(VertexId from, VertexId to, Capacity capacity) {
  if (from >= vertex_count_ || to >= vertex_count_) {
    raise<DomainError>("add_edge: vertex id out of range (" + std::to_string(from) + " -> " +
                       std::to_string(to) + ")");
  }
  if (from == to) raise<DomainError>("add_edge: self-loop on vertex " + std::to_string(from));
  if (capacity < 0) raise<DomainError>("add_edge: negative capacity");
  const auto id = static_cast<EdgeId>(edges_.size());
  edges_.push_back({from, to, capacity});
  residual_.push_back(capacity);
  residual_.push_back(0);
  return id;
}

void FlowNetwork::reset_flow() noexcept {
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    residual_[2 * e] = edges_[e].capacity;
    residual_[2 * e + 1] = 0;
  }
}

bool FlowNetwork::same_structure(const FlowNetwork& other) const noexcept {
  return vertex_count_ == other.vertex_count_ && source_ == other.source_ &&
         sink_ == other.sink_ && edges_ == other.edges_;
}

Capacity FlowNetwork::net_outflow(VertexId v) const noexcept {
  Capacity net = 0;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Capacity f = flow(static_cast<EdgeId>(e));
    if (edges_[e].from == v) net += f;
    if (edges_[e].to == v) net -= f;
  }
  return net;
}

Capacity cut_cost(const FlowNetwork& net, std::span<const Side> side) {
  if (side.size() != net.vertex_count()) {
    raise<ShapeError>("cut_cost: partition covers " + std::to_string(side.size()) +
                      " vertices, network has " + std::to_string(net.vertex_count()));
  }
  if (side[net.source()] != Side::source || side[net.sink()] != Side::sink) {
    raise<DomainError>("cut_cost: source must be on the source side and sink on the sink side");
  }
  Capacity cost = 0;
  for (const Edge& e : net.edges()) {
    if (side[e.from] == Side::source && side[e.to] == Side::sink) cost += e.capacity;
  }
  return cost;
}

}  // namespace xbench::graphcut
