#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "dsr/graph.hpp"

namespace dsr::brute {

inline bool dominates_mask(const std::vector<std::uint64_t>& closed, std::uint64_t mask) {
    std::uint64_t covered = 0;
    for (std::size_t v = 0; v < closed.size(); ++v)
        if (mask >> v & 1u) covered |= closed[v];
    const std::uint64_t all = closed.size() == 64 ? ~0ull : (1ull << closed.size()) - 1;
    return covered == all;
}

/// Domination number by scanning every subset; n <= 20.
inline int domination_number(const Graph& g) {
    const auto closed = closed_neighborhood_masks(g);
    int best = g.n();
    for (std::uint64_t mask = 0; mask < (1ull << g.n()); ++mask)
        if (std::popcount(mask) < best && dominates_mask(closed, mask)) best = std::popcount(mask);
    return best;
}

/// Induced P4 by checking every 4-subset and every vertex ordering.
inline bool has_induced_p4(const Graph& g) {
    const Vertex n = g.n();
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b)
            for (Vertex c = 0; c < n; ++c)
                for (Vertex d = 0; d < n; ++d) {
                    if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
                    if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(c, d) && !g.has_edge(a, c) &&
                        !g.has_edge(a, d) && !g.has_edge(b, d))
                        return true;
                }
    return false;
}

}  // namespace dsr::brute
