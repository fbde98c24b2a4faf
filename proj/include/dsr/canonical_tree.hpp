#pragma once

#include <vector>

#include "dsr/cells.hpp"
#include "dsr/graph.hpp"
#include "dsr/reconfig.hpp"

namespace dsr {

/// Bottom-up 1/2/3 labelling of a tree rooted at a degree-one vertex.
///
/// Leaves get 1. An inner non-root vertex gets 1 when all children carry 3,
/// 2 when some child carries 1, and 3 otherwise. The root gets 3 when its
/// child carries 2 and 2 otherwise. Label-2 vertices form a canonical
/// dominating set: minimum, and reachable from any dominating set D without
/// exceeding |D| + 1.
struct TreeLabeling {
    Vertex root = 0;
    std::vector<Vertex> parent;     // -1 for the root
    std::vector<int> label;         // 1, 2 or 3
    std::vector<Vertex> postorder;  // children visited in ascending id order
    VertexSet v1, v2, v3;
};

using TreeCells = CellPartition;

/// Smallest-id vertex of degree one, or 0 when n == 1.
Vertex default_tree_root(const Graph& t);

/// Throws if t is not a tree or (for n >= 2) the root is not a leaf.
TreeLabeling label_tree(const Graph& t, Vertex root);
inline TreeLabeling label_tree(const Graph& t) { return label_tree(t, default_tree_root(t)); }

/// C_i = V(T_i) minus earlier subtrees, with V2 in post-order; the last cell
/// also takes whatever remains (the root when it is labelled 3).
TreeCells tree_cells(const TreeLabeling& lab);

/// Sequence d -> V2 whose sets stay dominating and within |d| + 1.
ReconfSequence transform_tree(const Graph& t, const TreeCells& cells, const VertexSet& d);

}  // namespace dsr
