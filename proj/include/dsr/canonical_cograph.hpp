#pragma once

#include "dsr/cotree.hpp"
#include "dsr/graph.hpp"
#include "dsr/reconfig.hpp"

namespace dsr {

/// Canonical dominating set of a connected cograph: a universal vertex when
/// one exists, otherwise one vertex from each side of the root join.
struct CographCanonical {
    VertexSet canonical;
    VertexSet side_a;  // leaves of the first child of the root join (size-2 case only)
    VertexSet side_b;  // the remaining leaves
    Vertex a = -1;     // min(side_a), or the universal vertex
    Vertex b = -1;     // min(side_b), -1 in the universal case
};

CographCanonical cograph_canonical(const Graph& g, const Cotree& ct);

/// Sequence d -> canonical within |d| + 1.
ReconfSequence transform_cograph(const Graph& g, const CographCanonical& can, const VertexSet& d);

}  // namespace dsr
