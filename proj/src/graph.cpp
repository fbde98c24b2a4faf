#include "dsr/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace dsr {

VertexSet::VertexSet(std::initializer_list<Vertex> ids) : VertexSet(std::vector<Vertex>(ids)) {}

VertexSet::VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
    if (!ids_.empty() && ids_.front() < 0) throw Error("negative vertex id in set");
}

VertexSet VertexSet::from_mask(std::uint64_t mask) {
    VertexSet s;
    while (mask != 0) {
        s.ids_.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return s;
}

bool VertexSet::contains(Vertex v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }

bool VertexSet::insert(Vertex v) {
    if (v < 0) throw Error("negative vertex id in set");
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it != ids_.end() && *it == v) return false;
    ids_.insert(it, v);
    return true;
}

bool VertexSet::erase(Vertex v) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v) return false;
    ids_.erase(it);
    return true;
}

std::uint64_t VertexSet::mask() const {
    std::uint64_t m = 0;
    for (Vertex v : ids_) {
        if (v >= 64) throw Error("vertex id too large for a 64-bit mask");
        m |= std::uint64_t{1} << v;
    }
    return m;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    std::vector<Vertex> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    std::vector<Vertex> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    std::vector<Vertex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

Graph::Graph(Vertex n, std::span<const Edge> edges) : adj_(static_cast<std::size_t>(n)) {
    if (n < 0) throw Error("negative vertex count");
    for (auto [u, v] : edges) {
        if (!contains(u) || !contains(v)) throw Error("edge endpoint out of range");
        if (u == v) throw Error("self-loop on vertex " + std::to_string(u));
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    m_ = 0;
    for (auto& nb : adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        m_ += nb.size();
    }
    m_ /= 2;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (!contains(u) || !contains(v)) return false;
    const auto& a = adj_[static_cast<std::size_t>(u)];
    const auto& b = adj_[static_cast<std::size_t>(v)];
    // search the shorter list
    return a.size() <= b.size() ? std::binary_search(a.begin(), a.end(), v)
                                : std::binary_search(b.begin(), b.end(), u);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n(); ++u)
        for (Vertex v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    std::vector<Vertex> local(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) local[static_cast<std::size_t>(vertices[i])] = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (Vertex w : g.neighbors(vertices[i])) {
            Vertex j = local[static_cast<std::size_t>(w)];
            if (j > static_cast<Vertex>(i)) edges.emplace_back(static_cast<Vertex>(i), j);
        }
    return Graph(static_cast<Vertex>(vertices.size()), edges);
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> out;
    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.n(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<Vertex> comp;
        seen[static_cast<std::size_t>(s)] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (Vertex w : g.neighbors(u))
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
        }
        out.emplace_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) { return g.n() <= 1 || connected_components(g).size() == 1; }

bool is_tree(const Graph& g) {
    return g.n() >= 1 && g.m() == static_cast<std::size_t>(g.n()) - 1 && is_connected(g);
}

bool is_forest(const Graph& g) {
    return g.m() + connected_components(g).size() == static_cast<std::size_t>(g.n());
}

bool is_bipartite(const Graph& g) {
    std::vector<int> color(static_cast<std::size_t>(g.n()), -1);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.n(); ++s) {
        if (color[static_cast<std::size_t>(s)] >= 0) continue;
        color[static_cast<std::size_t>(s)] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(u)) {
                auto& cw = color[static_cast<std::size_t>(w)];
                if (cw < 0) {
                    cw = 1 - color[static_cast<std::size_t>(u)];
                    stack.push_back(w);
                } else if (cw == color[static_cast<std::size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_split_partition(const Graph& g, const VertexSet& clique, const VertexSet& independent) {
    if (clique.size() + independent.size() != static_cast<std::size_t>(g.n())) return false;
    if (!set_intersection(clique, independent).empty()) return false;
    if (!clique.empty() && !g.contains(clique.ids().back())) return false;
    if (!independent.empty() && !g.contains(independent.ids().back())) return false;
    for (std::size_t i = 0; i < clique.size(); ++i)
        if (g.degree(clique[i]) < clique.size() - 1) return false;
    for (std::size_t i = 0; i < clique.size(); ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j)
            if (!g.has_edge(clique[i], clique[j])) return false;
    for (Vertex b : independent)
        for (Vertex w : g.neighbors(b))
            if (independent.contains(w)) return false;
    return true;
}

std::vector<std::uint64_t> closed_neighborhood_masks(const Graph& g) {
    if (g.n() > 64) throw Error("closed_neighborhood_masks requires n <= 64");
    std::vector<std::uint64_t> out(static_cast<std::size_t>(g.n()));
    for (Vertex v = 0; v < g.n(); ++v) {
        std::uint64_t m = std::uint64_t{1} << v;
        for (Vertex w : g.neighbors(v)) m |= std::uint64_t{1} << w;
        out[static_cast<std::size_t>(v)] = m;
    }
    return out;
}

Graph path_graph(Vertex n) {
    std::vector<Edge> e;
    for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph cycle_graph(Vertex n) {
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

Graph complete_graph(Vertex n) {
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

Graph star_graph(Vertex leaves) {
    std::vector<Edge> e;
    for (Vertex i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph(leaves + 1, e);
}

}  // namespace dsr
