#pragma once

#include "dsr/graph.hpp"

namespace dsr {

/// Throws if some member of d is not a vertex of g.
void check_members(const Graph& g, const VertexSet& d);

bool is_dominating(const Graph& g, const VertexSet& d);

/// Per-vertex count |N[u] ∩ d|.
std::vector<int> dominator_counts(const Graph& g, const VertexSet& d);

/// Members w of d such that d \ {w} still dominates g. O(n + m).
/// Throws if d does not dominate g.
VertexSet deletable_vertices(const Graph& g, const VertexSet& d);

bool is_minimal(const Graph& g, const VertexSet& d);

/// Largest n accepted by min_dominating_set_bruteforce.
inline constexpr Vertex kBruteForceLimit = 24;

/// Minimum dominating set by enumerating subsets in increasing size, each size
/// in lexicographic order; the first hit is returned.
VertexSet min_dominating_set_bruteforce(const Graph& g);

}  // namespace dsr
