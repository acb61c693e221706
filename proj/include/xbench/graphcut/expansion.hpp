#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "xbench/graphcut/flow_network.hpp"
#include "xbench/graphcut/image.hpp"

namespace xbench::graphcut {

using Label = std::uint8_t;
using Energy = std::int64_t;

// Labels are intensities, so a labeling is itself a GrayImage.
//
// E(f) = sum over 4-neighbours {p,q} of V(f_p, f_q) + sum over pixels of D_p(f_p)
// with the Potts smoothness V(a, b) = lambda * [a != b] and the data term
// D_p(l) = round(100 * |I_p - l| / 255) against the observed image I.
class EnergyModel {
 public:
  // Throws DomainError on an empty or non-ascending label set or negative lambda.
  EnergyModel(GrayImage observed, std::vector<Label> labels, Energy lambda = 1);

  // Labels {0, 255}, the usual foreground/background model.
  static EnergyModel binary(GrayImage observed, Energy lambda = 1);

  const GrayImage& observed() const noexcept { return observed_; }
  const std::vector<Label>& labels() const noexcept { return labels_; }
  Energy lambda() const noexcept { return lambda_; }
  bool has_label(Label l) const noexcept;

  Energy data_cost(std::size_t pixel, Label l) const noexcept;
  Energy smoothness(Label a, Label b) const noexcept { return a == b ? 0 : lambda_; }

  // Throws ShapeError on a size mismatch.
  Energy energy(const GrayImage& labeling) const;

 private:
  GrayImage observed_;
  std::vector<Label> labels_;
  Energy lambda_;
};

// Flow network for one alpha-expansion move from `labeling`.
//
// Vertices 0..P-1 are pixels (row-major), P..P+A-1 auxiliary vertices (one per
// neighbouring pair with different labels, in scan order: right neighbour
// before lower neighbour), then source (alpha) and sink (not-alpha). A pixel
// on the sink side of a cut takes label alpha, one on the source side keeps
// its label. For every pixel side assignment, the cheapest placement of the
// auxiliary vertices gives a cut equal to the energy of the induced labeling.
struct ExpansionGraph {
  FlowNetwork net;
  std::size_t pixel_count = 0;
  std::size_t aux_count = 0;
  std::size_t width = 0;
  std::size_t height = 0;
  Label alpha = 0;

  VertexId source() const noexcept { return net.source(); }
  VertexId sink() const noexcept { return net.sink(); }

  // Labeling induced by a cut.
  GrayImage labeling_from_cut(const GrayImage& current, const std::vector<Side>& side) const;
};

// Throws DomainError if alpha or any label in `labeling` is outside the model.
ExpansionGraph build_expansion_graph(const GrayImage& labeling, const EnergyModel& model,
                                     Label alpha);

struct ExpansionMove {
  GrayImage labeling;
  Energy energy = 0;
  Capacity cut_value = 0;
};

// Best labeling within one alpha-expansion of `labeling`.
ExpansionMove best_expansion_move(const GrayImage& labeling, const EnergyModel& model, Label alpha);

struct ExpansionResult {
  GrayImage labeling;
  Energy energy = 0;
  std::vector<Energy> energy_history;  // initial energy, then one entry per accepted move
  std::size_t passes = 0;
};

// Cycles over labels in ascending order, accepting a move only when it
// strictly lowers the energy, until a full pass accepts none.
ExpansionResult alpha_expansion(const GrayImage& initial, const EnergyModel& model);

}  // namespace xbench::graphcut
