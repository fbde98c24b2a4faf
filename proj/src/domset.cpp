#include "dsr/domset.hpp"

#include <numeric>

namespace dsr {

void check_members(const Graph& g, const VertexSet& d) {
    if (!d.empty() && !g.contains(d.ids().back()))
        throw Error("vertex " + std::to_string(d.ids().back() + 1) + " out of range");
}

std::vector<int> dominator_counts(const Graph& g, const VertexSet& d) {
    check_members(g, d);
    std::vector<int> count(static_cast<std::size_t>(g.n()), 0);
    for (Vertex w : d) {
        ++count[static_cast<std::size_t>(w)];
        for (Vertex u : g.neighbors(w)) ++count[static_cast<std::size_t>(u)];
    }
    return count;
}

bool is_dominating(const Graph& g, const VertexSet& d) {
    auto count = dominator_counts(g, d);
    for (int c : count)
        if (c == 0) return false;
    return true;
}

VertexSet deletable_vertices(const Graph& g, const VertexSet& d) {
    auto count = dominator_counts(g, d);
    for (int c : count)
        if (c == 0) throw Error("set is not a dominating set");
    // w is deletable iff every u in N[w] keeps another dominator
    std::vector<Vertex> out;
    for (Vertex w : d) {
        bool ok = count[static_cast<std::size_t>(w)] >= 2;
        for (Vertex u : g.neighbors(w)) {
            if (!ok) break;
            ok = count[static_cast<std::size_t>(u)] >= 2;
        }
        if (ok) out.push_back(w);
    }
    return VertexSet(std::move(out));
}

bool is_minimal(const Graph& g, const VertexSet& d) { return deletable_vertices(g, d).empty(); }

VertexSet min_dominating_set_bruteforce(const Graph& g) {
    const Vertex n = g.n();
    if (n > kBruteForceLimit)
        throw Error("brute-force domination limited to n <= " + std::to_string(kBruteForceLimit));
    if (n == 0) return {};
    const auto closed = closed_neighborhood_masks(g);
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    std::vector<Vertex> pick;
    for (Vertex size = 1; size <= n; ++size) {
        pick.resize(static_cast<std::size_t>(size));
        std::iota(pick.begin(), pick.end(), 0);
        for (;;) {
            std::uint64_t covered = 0;
            for (Vertex v : pick) covered |= closed[static_cast<std::size_t>(v)];
            if (covered == full) return VertexSet(pick);
            // next combination in lexicographic order
            int i = size - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - size + i) --i;
            if (i < 0) break;
            ++pick[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return {};  // unreachable: V(G) dominates
}

}  // namespace dsr
