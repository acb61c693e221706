#include "xbench/graphcut/expansion.hpp"

#include <algorithm>
#include <string>

#include "xbench/errors.hpp"
#include "xbench/graphcut/bk_maxflow.hpp"

namespace xbench::graphcut {

EnergyModel::EnergyModel(GrayImage observed, std::vector<Label> labels, Energy lambda)
    : observed_(std::move(observed)), labels_(std::move(labels)), lambda_(lambda) {
  if (labels_.empty()) raise<DomainError>("EnergyModel: empty label set");
  if (!std::is_sorted(labels_.begin(), labels_.end()) ||
      std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
    raise<DomainError>("EnergyModel: labels must be strictly ascending");
  }
  if (lambda_ < 0) raise<DomainError>("EnergyModel: lambda must be non-negative");
}

EnergyModel EnergyModel::binary(GrayImage observed, Energy lambda) {
  return EnergyModel(std::move(observed), {0, 255}, lambda);
}

bool EnergyModel::has_label(Label l) const noexcept {
  return std::binary_search(labels_.begin(), labels_.end(), l);
}

Energy EnergyModel::data_cost(std::size_t pixel, Label l) const noexcept {
  const Energy diff = observed_[pixel] > l ? observed_[pixel] - l : l - observed_[pixel];
  return (diff * 100 + 127) / 255;
}

Energy EnergyModel::energy(const GrayImage& labeling) const {
  if (labeling.width() != observed_.width() || labeling.height() != observed_.height()) {
    raise<ShapeError>("EnergyModel::energy: labeling and observed image differ in size");
  }
  const std::size_t w = labeling.width();
  const std::size_t h = labeling.height();
  Energy e = 0;
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      const Label l = labeling.at(x, y);
      e += data_cost(y * w + x, l);
      if (x + 1 < w) e += smoothness(l, labeling.at(x + 1, y));
      if (y + 1 < h) e += smoothness(l, labeling.at(x, y + 1));
    }
  }
  return e;
}

GrayImage ExpansionGraph::labeling_from_cut(const GrayImage& current,
                                            const std::vector<Side>& side) const {
  GrayImage out = current;
  for (std::size_t p = 0; p < pixel_count; ++p) {
    if (side[p] == Side::sink) out[p] = alpha;
  }
  return out;
}

namespace {

struct PendingEdge {
  VertexId from;
  VertexId to;
  Capacity capacity;  // negative marks "infinite"
};

}  // namespace

ExpansionGraph build_expansion_graph(const GrayImage& labeling, const EnergyModel& model,
                                     Label alpha) {
  if (!model.has_label(alpha)) {
    raise<DomainError>("build_expansion_graph: alpha " + std::to_string(alpha) +
                       " is not in the label set");
  }
  const GrayImage& observed = model.observed();
  if (labeling.width() != observed.width() || labeling.height() != observed.height()) {
    raise<ShapeError>("build_expansion_graph: labeling and observed image differ in size");
  }
  for (std::size_t p = 0; p < labeling.size(); ++p) {
    if (!model.has_label(labeling[p])) {
      raise<DomainError>("build_expansion_graph: pixel " + std::to_string(p) + " has label " +
                         std::to_string(labeling[p]) + " outside the label set");
    }
  }

  const std::size_t w = labeling.width();
  const std::size_t h = labeling.height();
  const std::size_t pixels = labeling.size();

  std::size_t aux = 0;
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      if (x + 1 < w && labeling.at(x, y) != labeling.at(x + 1, y)) ++aux;
      if (y + 1 < h && labeling.at(x, y) != labeling.at(x, y + 1)) ++aux;
    }
  }

  const auto source = static_cast<VertexId>(pixels + aux);
  const auto sink = static_cast<VertexId>(pixels + aux + 1);

  std::vector<PendingEdge> pending;
  Capacity finite_total = 0;
  auto add = [&](VertexId from, VertexId to, Capacity c) {
    if (c == 0) return;
    if (c > 0) finite_total += c;
    pending.push_back({from, to, c});
  };

  // t-links: source -> p pays D_p(alpha) when p switches; p -> sink pays D_p(f_p)
  // when p keeps its label, and is uncuttable when f_p is already alpha.
  for (std::size_t p = 0; p < pixels; ++p) {
    const auto v = static_cast<VertexId>(p);
    add(source, v, model.data_cost(p, alpha));
    if (labeling[p] == alpha) {
      add(v, sink, -1);
    } else {
      add(v, sink, model.data_cost(p, labeling[p]));
    }
  }

  auto next_aux = static_cast<VertexId>(pixels);
  auto link_pair = [&](std::size_t p, std::size_t q) {
    const auto vp = static_cast<VertexId>(p);
    const auto vq = static_cast<VertexId>(q);
    const Label fp = labeling[p];
    const Label fq = labeling[q];
    if (fp == fq) {
      const Capacity c = model.smoothness(fp, alpha);
      add(vp, vq, c);
      add(vq, vp, c);
      return;
    }
    const VertexId a = next_aux++;
    const Capacity pa = model.smoothness(fp, alpha);
    const Capacity aq = model.smoothness(alpha, fq);
    add(vp, a, pa);
    add(a, vp, pa);
    add(a, vq, aq);
    add(vq, a, aq);
    add(a, sink, model.smoothness(fp, fq));
  };
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      const std::size_t p = y * w + x;
      if (x + 1 < w) link_pair(p, p + 1);
      if (y + 1 < h) link_pair(p, p + w);
    }
  }

  ExpansionGraph g{FlowNetwork(pixels + aux + 2, source, sink), pixels, aux, w, h, alpha};
  const Capacity infinite = finite_total + 1;
  for (const auto& e : pending) g.net.add_edge(e.from, e.to, e.capacity < 0 ? infinite : e.capacity);
  return g;
}

ExpansionMove best_expansion_move(const GrayImage& labeling, const EnergyModel& model, Label alpha) {
  ExpansionGraph g = build_expansion_graph(labeling, model, alpha);
  const CutResult cut = bk_maxflow(g.net);
  ExpansionMove move;
  move.labeling = g.labeling_from_cut(labeling, cut.side);
  move.energy = model.energy(move.labeling);
  move.cut_value = cut.max_flow;
  return move;
}

ExpansionResult alpha_expansion(const GrayImage& initial, const EnergyModel& model) {
  ExpansionResult result;
  result.labeling = initial;
  result.energy = model.energy(initial);
  result.energy_history.push_back(result.energy);

  bool success = true;
  while (success) {
    success = false;
    ++result.passes;
    for (const Label alpha : model.labels()) {
      ExpansionMove move = best_expansion_move(result.labeling, model, alpha);
      if (move.energy < result.energy) {
        result.labeling = std::move(move.labeling);
        result.energy = move.energy;
        result.energy_history.push_back(result.energy);
        success = true;
      }
    }
  }
  return result;
}

}  // namespace xbench::graphcut
