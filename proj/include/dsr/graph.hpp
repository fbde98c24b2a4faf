#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dsr {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input; carries the offending 1-based line number (0 if unknown).
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Sorted, duplicate-free list of vertex ids.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> ids);
    explicit VertexSet(std::vector<Vertex> ids);

    static VertexSet from_mask(std::uint64_t mask);

    bool contains(Vertex v) const;
    /// Returns false if v was already present.
    bool insert(Vertex v);
    /// Returns false if v was absent.
    bool erase(Vertex v);

    std::size_t size() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }
    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }
    Vertex operator[](std::size_t i) const { return ids_[i]; }
    const std::vector<Vertex>& ids() const { return ids_; }

    /// Largest member + 1, or 0 when empty.
    Vertex bound() const { return ids_.empty() ? 0 : ids_.back() + 1; }

    std::uint64_t mask() const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.ids_ <=> b.ids_; }

private:
    std::vector<Vertex> ids_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
public:
    Graph() = default;
    explicit Graph(Vertex n) : adj_(static_cast<std::size_t>(n)) {}
    /// Duplicate edges collapse; self-loops and out-of-range ids throw.
    Graph(Vertex n, std::span<const Edge> edges);
    Graph(Vertex n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    Vertex n() const { return static_cast<Vertex>(adj_.size()); }
    std::size_t m() const { return m_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    std::size_t degree(Vertex v) const { return adj_[static_cast<std::size_t>(v)].size(); }
    bool has_edge(Vertex u, Vertex v) const;
    bool contains(Vertex v) const { return v >= 0 && v < n(); }

    /// Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t m_ = 0;
};

/// Subgraph induced by `vertices` (in the given order); local id i maps to vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Components ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
/// Every component is a tree.
bool is_forest(const Graph& g);
bool is_bipartite(const Graph& g);

/// Clique side A and independent side B both validated against g.
bool is_split_partition(const Graph& g, const VertexSet& clique, const VertexSet& independent);

/// Closed-neighborhood bit masks; requires n <= 64.
std::vector<std::uint64_t> closed_neighborhood_masks(const Graph& g);

// Standard small graphs used throughout tests and examples.
Graph path_graph(Vertex n);
Graph cycle_graph(Vertex n);
Graph complete_graph(Vertex n);
Graph star_graph(Vertex leaves);

}  // namespace dsr
