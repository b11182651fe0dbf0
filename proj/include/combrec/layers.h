#ifndef COMBREC_LAYERS_H_
#define COMBREC_LAYERS_H_

#include <optional>
#include <vector>

#include "combrec/comb.h"
#include "combrec/graph.h"

namespace combrec {

// A comb read as a sequence of layers from the innermost outwards. A vertex
// on the clique side of a layer is adjacent to every vertex of every inner
// layer; a vertex on the stable side is adjacent to nothing inner. Within a
// layer:
//   kIsolated   stable vertices only
//   kUniversal  clique vertices only (a clique)
//   kThin       stable[i] adjacent to clique[i] only
//   kThick      stable[i] adjacent to every clique vertex except clique[i]
enum class LayerKind { kIsolated, kUniversal, kThin, kThick };

struct Layer {
  LayerKind kind;
  std::vector<Vertex> stable;
  std::vector<Vertex> clique;

  friend bool operator==(const Layer&, const Layer&) = default;
};

using LayerSequence = std::vector<Layer>;

// Merges neighbouring isolated (resp. universal) layers, rewrites one-pair
// spiders as isolated + universal layers and two-pair thick spiders as thin
// ones, and drops empty layers.
LayerSequence NormalizeLayers(LayerSequence seq);

LayerSequence LayersFromComb(const CombDecomposition& dec);
CombDecomposition CombFromLayers(LayerSequence seq);

// Peels layers off g[vertices] from the outside, keeping every vertex on the
// side given by on_clique_side. Returns nullopt if some remaining piece is
// neither isolated, universal, nor a spider.
std::optional<LayerSequence> PeelLayers(const Graph& g, const VertexSet& vertices,
                                        const Bits& on_clique_side);

}  // namespace combrec

#endif  // COMBREC_LAYERS_H_
