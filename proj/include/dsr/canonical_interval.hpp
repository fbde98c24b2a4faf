#pragma once

#include <vector>

#include "dsr/cells.hpp"
#include "dsr/interval.hpp"
#include "dsr/reconfig.hpp"

namespace dsr {

/// Left-to-right 1/2/3 labelling of a connected interval graph.
///
/// Each round labels the unlabelled vertex u with the smallest right endpoint
/// 1, relabels the vertex of N[u] with the largest right endpoint 2, and marks
/// its unlabelled neighbours 3.
struct IntervalLabeling {
    std::vector<int> label;
    VertexSet v1, v2, v3;
    std::vector<Vertex> w_order;  // V2 by increasing right endpoint
};

using IntervalCells = CellPartition;

/// Requires a valid representation of a connected g; tied right endpoints are
/// canonicalised internally.
IntervalLabeling label_interval(const Graph& g, const IntervalRepresentation& rep);

/// C_1 = {r(v) <= r(w_1)}, C_i = {r(w_{i-1}) < r(v) <= r(w_i)}, and the last
/// cell is open on the right.
IntervalCells interval_cells(const IntervalLabeling& lab, const IntervalRepresentation& rep);

ReconfSequence transform_interval(const Graph& g, const IntervalCells& cells, const VertexSet& d);

}  // namespace dsr
