#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "gcode/complex.hpp"
#include "gcode/z2.hpp"

namespace gcode {

/// Half-open interval [birth, death) in horizontal units. Essential
/// classes die at the sentinel grade and carry the flag.
struct Bar {
  double birth = 0.0;
  double death = 0.0;
  bool essential = false;

  double persistence() const { return death - birth; }
  bool operator==(const Bar&) const = default;
};

struct GraphcodeNode {
  std::uint32_t id = 0;
  int layer = 1;  // in [1, s]
  Bar bar;
  std::optional<Z2Column> representative;  // support over global row indices
};

/// Layered graph over per-slice barcode bases; edges connect
/// consecutive layers only.
struct Graphcode {
  int slices = 1;
  std::vector<double> cuts;
  double sentinel = 0.0;
  std::vector<GraphcodeNode> nodes;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
};

enum class SliceMode { equidistant, quantile };

struct SliceAssignment {
  int slices = 1;
  std::vector<double> cuts;        // ascending, last = max y
  std::vector<int> row_layer;      // 1-based layer per row
  std::vector<int> column_layer;   // 1-based layer per column
};

/// Split the vertical range into s slices. Equidistant cuts span
/// [min y, max y] with the last cut pinned to max y; a degenerate
/// (zero-width) range normalizes to s = 1.
SliceAssignment assign_slices(const GradedMatrix& matrix, int s,
                              SliceMode mode = SliceMode::equidistant);

/// Batched out-of-order reduction over a capped matrix: columns stay in
/// global horizontal order but enter in vertical batches. After each
/// batch the nonzero columns are the layer's barcode basis; additions
/// into columns that were basis elements of the previous layer are
/// tracked and become the edges.
Graphcode compute_graphcode(const GradedMatrix& matrix, int s,
                            bool keep_representatives = false,
                            SliceMode mode = SliceMode::equidistant);

/// Subgraph induced by nodes with persistence strictly above t.
/// Node ids are re-densified.
Graphcode threshold_filter(const Graphcode& gc, double t);

/// Per-node numeric attributes (b, d, d-b, d/b); the layer index is
/// carried separately. A non-positive birth suppresses the ratio to 0
/// and sets the flag.
struct NodeAttributes {
  std::vector<std::array<double, 4>> values;  // parallel to gc.nodes
  std::vector<int> layers;
  bool ratio_suppressed = false;
};

NodeAttributes node_attributes(const Graphcode& gc);

}  // namespace gcode
