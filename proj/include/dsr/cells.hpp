#pragma once

#include <vector>

#include "dsr/graph.hpp"
#include "dsr/reconfig.hpp"

namespace dsr {

/// Ordered partition of V(G) into cells C_1..C_p, each holding exactly one
/// canonical vertex (its anchor).
struct CellPartition {
    std::vector<Vertex> anchors;
    std::vector<VertexSet> cells;
    std::vector<int> cell_of;  // vertex -> cell index

    std::size_t size() const { return cells.size(); }
};

/// Cells are disjoint, cover 0..n-1, agree with cell_of, and cells[i] ∩ anchors = {anchors[i]}.
bool is_cell_partition(Vertex n, const CellPartition& cells);

/// Cell-by-cell sweep towards the anchor set: for each cell in order, add the
/// anchor if absent, then remove the other members of d in that cell in
/// ascending order. Throws if d does not dominate g.
ReconfSequence transform_by_cells(const Graph& g, const CellPartition& cells, const VertexSet& d);

}  // namespace dsr
