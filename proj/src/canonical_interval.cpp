#include "dsr/canonical_interval.hpp"

#include <algorithm>
#include <numeric>

namespace dsr {

IntervalLabeling label_interval(const Graph& g, const IntervalRepresentation& rep) {
    if (!validate_interval_representation(g, rep)) throw Error("label_interval: representation does not match graph");
    if (!is_connected(g)) throw Error("label_interval: graph must be connected");
    const IntervalRepresentation canon = canonicalize(rep);
    const auto n = static_cast<std::size_t>(g.n());

    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        return canon[a].right != canon[b].right ? canon[a].right < canon[b].right : a < b;
    });

    IntervalLabeling lab;
    lab.label.assign(n, 0);
    for (std::size_t next = 0;; ++next) {
        while (next < n && lab.label[static_cast<std::size_t>(order[next])] != 0) ++next;
        if (next == n) break;
        const Vertex u = order[next];
        lab.label[static_cast<std::size_t>(u)] = 1;
        Vertex best = u;
        for (Vertex w : g.neighbors(u))
            if (canon[w].right > canon[best].right) best = w;
        lab.label[static_cast<std::size_t>(best)] = 2;
        for (Vertex w : g.neighbors(best))
            if (lab.label[static_cast<std::size_t>(w)] == 0) lab.label[static_cast<std::size_t>(w)] = 3;
    }

    std::vector<Vertex> parts[3];
    for (std::size_t v = 0; v < n; ++v) parts[lab.label[v] - 1].push_back(static_cast<Vertex>(v));
    lab.v1 = VertexSet(std::move(parts[0]));
    lab.v2 = VertexSet(std::move(parts[1]));
    lab.v3 = VertexSet(std::move(parts[2]));
    for (Vertex v : order)
        if (lab.label[static_cast<std::size_t>(v)] == 2) lab.w_order.push_back(v);
    return lab;
}

IntervalCells interval_cells(const IntervalLabeling& lab, const IntervalRepresentation& rep) {
    const IntervalRepresentation canon = canonicalize(rep);
    if (lab.w_order.empty()) throw Error("interval_cells: empty labelling");
    IntervalCells cells;
    cells.anchors = lab.w_order;
    std::vector<Rational> bounds;
    for (Vertex w : lab.w_order) bounds.push_back(canon[w].right);
    const auto last = static_cast<int>(bounds.size()) - 1;
    cells.cell_of.resize(static_cast<std::size_t>(canon.size()));
    std::vector<std::vector<Vertex>> members(bounds.size());
    for (Vertex v = 0; v < canon.size(); ++v) {
        auto i = static_cast<int>(std::lower_bound(bounds.begin(), bounds.end(), canon[v].right) - bounds.begin());
        i = std::min(i, last);
        cells.cell_of[static_cast<std::size_t>(v)] = i;
        members[static_cast<std::size_t>(i)].push_back(v);
    }
    for (auto& m : members) cells.cells.emplace_back(std::move(m));
    return cells;
}

ReconfSequence transform_interval(const Graph& g, const IntervalCells& cells, const VertexSet& d) {
    return transform_by_cells(g, cells, d);
}

}  // namespace dsr
