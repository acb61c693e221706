#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <vector>

#include "xbench/graphcut/flow_network.hpp"

namespace xbench::graphcut {

enum class Tree : std::uint8_t { free, source, sink };

// Search-tree bookkeeping of the augmenting-path solver.
//
// parent[v] is the arc linking v to its parent, oriented along the direction
// flow travels: parent -> v inside the source tree, v -> parent inside the
// sink tree. Both queues are processed first-in first-out.
struct BkState {
  std::vector<Tree> tree;
  std::vector<ArcId> parent;
  std::deque<VertexId> active;
  std::deque<VertexId> orphans;
};

struct BkOptions {
  // Verify the tree invariants after every adoption pass (slow; for tests).
  bool check_invariants = false;
};

// Two-tree augmenting path max-flow: grow source and sink search trees until
// they touch, push the bottleneck along the found path, then re-attach or
// free the vertices cut off by saturated tree arcs. Repeats until the trees
// can no longer meet. Mutates the network's residuals.
class BkSolver {
 public:
  explicit BkSolver(FlowNetwork& net, BkOptions options = {});

  CutResult solve();

  const BkState& state() const noexcept { return state_; }
  std::size_t augmentations() const noexcept { return augmentations_; }

 private:
  ArcId grow();
  void augment(ArcId middle);
  void adopt();
  void process_orphan(VertexId p);
  bool has_terminal_root(VertexId v);
  VertexId parent_vertex(VertexId v) const noexcept;
  void activate(VertexId v);
  void check_invariants() const;

  FlowNetwork& net_;
  BkOptions options_;
  BkState state_;
  std::vector<std::uint32_t> offsets_;
  std::vector<ArcId> adjacency_;  // arcs out of each vertex, ascending by head id
  std::vector<bool> queued_;
  std::vector<std::uint64_t> verified_;
  std::uint64_t stamp_ = 1;
  Capacity flow_ = 0;
  std::size_t augmentations_ = 0;
};

// Resets residuals, solves, and returns the cut reachable from the source tree.
CutResult bk_maxflow(FlowNetwork& net, const BkOptions& options = {});

}  // namespace xbench::graphcut
