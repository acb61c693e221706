#include "xbench/graphcut/bk_maxflow.hpp"

#include <algorithm>
#include <string>

#include "xbench/errors.hpp"

namespace xbench::graphcut {

BkSolver::BkSolver(FlowNetwork& net, BkOptions options)
    : net_(net),
      options_(options),
      queued_(net.vertex_count(), false),
      verified_(net.vertex_count(), 0) {
  const std::size_t n = net.vertex_count();
  state_.tree.assign(n, Tree::free);
  state_.parent.assign(n, kNoArc);

  // CSR adjacency of arcs by tail, each bucket sorted by head id (then arc id)
  // so growth and adoption visit neighbours in ascending vertex order.
  offsets_.assign(n + 1, 0);
  for (ArcId a = 0; a < net.arc_count(); ++a) ++offsets_[net.arc_tail(a) + 1];
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] += offsets_[v];
  adjacency_.resize(net.arc_count());
  std::vector<std::uint32_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (ArcId a = 0; a < net.arc_count(); ++a) adjacency_[fill[net.arc_tail(a)]++] = a;
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(adjacency_.begin() + offsets_[v], adjacency_.begin() + offsets_[v + 1],
              [&](ArcId x, ArcId y) {
                const VertexId hx = net_.arc_head(x);
                const VertexId hy = net_.arc_head(y);
                return hx != hy ? hx < hy : x < y;
              });
  }
}

void BkSolver::activate(VertexId v) {
  if (!queued_[v]) {
    queued_[v] = true;
    state_.active.push_back(v);
  }
}

VertexId BkSolver::parent_vertex(VertexId v) const noexcept {
  const ArcId a = state_.parent[v];
  return state_.tree[v] == Tree::source ? net_.arc_tail(a) : net_.arc_head(a);
}

ArcId BkSolver::grow() {
  auto& tree = state_.tree;
  while (!state_.active.empty()) {
    const VertexId p = state_.active.front();
    if (tree[p] == Tree::free) {
      state_.active.pop_front();
      queued_[p] = false;
      continue;
    }
    const bool in_source = tree[p] == Tree::source;
    for (auto i = offsets_[p]; i < offsets_[p + 1]; ++i) {
      const ArcId a = adjacency_[i];
      const Capacity cap = in_source ? net_.residual(a) : net_.residual(FlowNetwork::sister(a));
      if (cap <= 0) continue;
      const VertexId q = net_.arc_head(a);
      if (tree[q] == Tree::free) {
        tree[q] = tree[p];
        state_.parent[q] = in_source ? a : FlowNetwork::sister(a);
        activate(q);
      } else if (tree[q] != tree[p]) {
        // Trees touch; p stays at the front of the queue for the next round.
        return in_source ? a : FlowNetwork::sister(a);
      }
    }
    state_.active.pop_front();
    queued_[p] = false;
  }
  return kNoArc;
}

void BkSolver::augment(ArcId middle) {
  const VertexId s = net_.source();
  const VertexId t = net_.sink();
  const VertexId head_s = net_.arc_tail(middle);
  const VertexId head_t = net_.arc_head(middle);

  Capacity delta = net_.residual(middle);
  for (VertexId v = head_s; v != s;) {
    const ArcId a = state_.parent[v];
    delta = std::min(delta, net_.residual(a));
    v = net_.arc_tail(a);
  }
  for (VertexId v = head_t; v != t;) {
    const ArcId a = state_.parent[v];
    delta = std::min(delta, net_.residual(a));
    v = net_.arc_head(a);
  }

  net_.push(middle, delta);
  for (VertexId v = head_s; v != s;) {
    const ArcId a = state_.parent[v];
    const VertexId up = net_.arc_tail(a);
    net_.push(a, delta);
    if (net_.residual(a) == 0) {
      state_.parent[v] = kNoArc;
      state_.orphans.push_back(v);
    }
    v = up;
  }
  for (VertexId v = head_t; v != t;) {
    const ArcId a = state_.parent[v];
    const VertexId up = net_.arc_head(a);
    net_.push(a, delta);
    if (net_.residual(a) == 0) {
      state_.parent[v] = kNoArc;
      state_.orphans.push_back(v);
    }
    v = up;
  }
  flow_ += delta;
  ++augmentations_;
}

// True if the parent chain from v ends at a terminal. Vertices proven rooted
// are stamped so later walks in the same adoption pass stop early.
bool BkSolver::has_terminal_root(VertexId v) {
  const VertexId s = net_.source();
  const VertexId t = net_.sink();
  VertexId x = v;
  bool rooted = false;
  while (true) {
    if (x == s || x == t || verified_[x] == stamp_) {
      rooted = true;
      break;
    }
    if (state_.parent[x] == kNoArc) break;
    x = parent_vertex(x);
  }
  if (rooted) {
    for (VertexId y = v; y != x; y = parent_vertex(y)) verified_[y] = stamp_;
  }
  return rooted;
}

void BkSolver::process_orphan(VertexId p) {
  auto& tree = state_.tree;
  const bool in_source = tree[p] == Tree::source;

  for (auto i = offsets_[p]; i < offsets_[p + 1]; ++i) {
    const ArcId a = adjacency_[i];
    const VertexId q = net_.arc_head(a);
    if (tree[q] != tree[p]) continue;
    // tree_cap(q -> p)
    const Capacity cap = in_source ? net_.residual(FlowNetwork::sister(a)) : net_.residual(a);
    if (cap <= 0) continue;
    if (has_terminal_root(q)) {
      state_.parent[p] = in_source ? FlowNetwork::sister(a) : a;
      verified_[p] = stamp_;
      return;
    }
  }

  // No valid parent: p leaves its tree.
  for (auto i = offsets_[p]; i < offsets_[p + 1]; ++i) {
    const ArcId a = adjacency_[i];
    const VertexId q = net_.arc_head(a);
    if (tree[q] != tree[p]) continue;
    const Capacity cap = in_source ? net_.residual(FlowNetwork::sister(a)) : net_.residual(a);
    if (cap > 0) activate(q);
    if (state_.parent[q] != kNoArc && parent_vertex(q) == p) {
      state_.parent[q] = kNoArc;
      state_.orphans.push_back(q);
    }
  }
  tree[p] = Tree::free;
}

void BkSolver::adopt() {
  ++stamp_;
  while (!state_.orphans.empty()) {
    const VertexId p = state_.orphans.front();
    state_.orphans.pop_front();
    process_orphan(p);
  }
}

void BkSolver::check_invariants() const {
  const std::size_t n = net_.vertex_count();
  for (VertexId v = 0; v < n; ++v) {
    if (state_.parent[v] == kNoArc) {
      if (state_.tree[v] != Tree::free && v != net_.source() && v != net_.sink()) {
        raise<Error>("bk invariant: vertex " + std::to_string(v) + " in a tree without a parent");
      }
      continue;
    }
    if (state_.tree[v] == Tree::free) {
      raise<Error>("bk invariant: free vertex " + std::to_string(v) + " has a parent");
    }
    const VertexId root = state_.tree[v] == Tree::source ? net_.source() : net_.sink();
    VertexId x = v;
    std::size_t steps = 0;
    while (x != root) {
      if (state_.parent[x] == kNoArc || state_.tree[x] != state_.tree[v] || ++steps > n) {
        raise<Error>("bk invariant: parent chain of " + std::to_string(v) +
                     " does not reach its terminal");
      }
      if (net_.residual(state_.parent[x]) <= 0) {
        raise<Error>("bk invariant: saturated tree arc above vertex " + std::to_string(x));
      }
      x = parent_vertex(x);
    }
  }
}

CutResult BkSolver::solve() {
  const VertexId s = net_.source();
  const VertexId t = net_.sink();
  state_.tree[s] = Tree::source;
  state_.tree[t] = Tree::sink;
  activate(s);
  activate(t);

  while (true) {
    const ArcId middle = grow();
    if (middle == kNoArc) break;
    augment(middle);
    adopt();
    if (options_.check_invariants) check_invariants();
  }

  CutResult result;
  result.max_flow = flow_;
  result.side.resize(net_.vertex_count());
  for (std::size_t v = 0; v < net_.vertex_count(); ++v) {
    result.side[v] = state_.tree[v] == Tree::source ? Side::source : Side::sink;
  }
  for (EdgeId e = 0; e < net_.edge_count(); ++e) {
    const Edge& edge = net_.edge(e);
    if (result.side[edge.from] == Side::source && result.side[edge.to] == Side::sink) {
      result.cut_edges.push_back(e);
    }
  }
  result.cut_cost = cut_cost(net_, result.side);
  return result;
}

CutResult bk_maxflow(FlowNetwork& net, const BkOptions& options) {
  net.reset_flow();
  BkSolver solver(net, options);
  return solver.solve();
}

}  // namespace xbench::graphcut
