#include "dsr/canonical_tree.hpp"

#include <algorithm>

#include "dsr/domset.hpp"

namespace dsr {

bool is_cell_partition(Vertex n, const CellPartition& cells) {
    if (cells.anchors.size() != cells.cells.size() || cells.cell_of.size() != static_cast<std::size_t>(n))
        return false;
    std::vector<int> owner(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < cells.cells.size(); ++i)
        for (Vertex v : cells.cells[i]) {
            if (v < 0 || v >= n || owner[static_cast<std::size_t>(v)] != -1) return false;
            owner[static_cast<std::size_t>(v)] = static_cast<int>(i);
        }
    if (owner != cells.cell_of) return false;
    VertexSet anchors(cells.anchors);
    if (anchors.size() != cells.anchors.size()) return false;
    for (std::size_t i = 0; i < cells.cells.size(); ++i)
        if (set_intersection(cells.cells[i], anchors) != VertexSet{cells.anchors[i]}) return false;
    return true;
}

ReconfSequence transform_by_cells(const Graph& g, const CellPartition& cells, const VertexSet& d) {
    if (!is_dominating(g, d)) throw Error("transform requires a dominating set");
    std::vector<std::vector<Vertex>> members(cells.size());
    for (Vertex v : d) members[static_cast<std::size_t>(cells.cell_of[static_cast<std::size_t>(v)])].push_back(v);
    ReconfSequence seq{d, {}};
    seq.moves.reserve(d.size() + cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const Vertex anchor = cells.anchors[i];
        const auto& here = members[i];
        if (!std::binary_search(here.begin(), here.end(), anchor)) seq.moves.push_back(Move::add(anchor));
        for (Vertex v : here)
            if (v != anchor) seq.moves.push_back(Move::remove(v));
    }
    return seq;
}

Vertex default_tree_root(const Graph& t) {
    for (Vertex v = 0; v < t.n(); ++v)
        if (t.degree(v) == 1) return v;
    return 0;
}

TreeLabeling label_tree(const Graph& t, Vertex root) {
    if (!is_tree(t)) throw Error("label_tree: graph is not a tree");
    if (!t.contains(root)) throw Error("label_tree: root out of range");
    if (t.n() >= 2 && t.degree(root) != 1) throw Error("label_tree: root must have degree one");

    const auto n = static_cast<std::size_t>(t.n());
    TreeLabeling lab;
    lab.root = root;
    lab.parent.assign(n, -1);
    lab.label.assign(n, 0);
    lab.postorder.reserve(n);

    // iterative DFS; next[v] is the position in v's sorted adjacency
    std::vector<std::size_t> next(n, 0);
    std::vector<Vertex> stack{root};
    while (!stack.empty()) {
        Vertex v = stack.back();
        auto nb = t.neighbors(v);
        auto& i = next[static_cast<std::size_t>(v)];
        while (i < nb.size() && nb[i] == lab.parent[static_cast<std::size_t>(v)]) ++i;
        if (i < nb.size()) {
            Vertex c = nb[i++];
            lab.parent[static_cast<std::size_t>(c)] = v;
            stack.push_back(c);
            continue;
        }
        stack.pop_back();
        lab.postorder.push_back(v);
    }

    // children summaries: any child labelled 1, all children labelled 3
    std::vector<char> has_one(n, 0), has_two(n, 0), all_three(n, 1), has_child(n, 0);
    for (Vertex v : lab.postorder) {
        const auto vi = static_cast<std::size_t>(v);
        int l;
        if (v == root)
            l = has_two[vi] ? 3 : 2;
        else if (!has_child[vi])
            l = 1;
        else if (all_three[vi])
            l = 1;
        else if (has_one[vi])
            l = 2;
        else
            l = 3;
        lab.label[vi] = l;
        if (Vertex p = lab.parent[vi]; p >= 0) {
            const auto pi = static_cast<std::size_t>(p);
            has_child[pi] = 1;
            has_one[pi] |= l == 1;
            has_two[pi] |= l == 2;
            all_three[pi] &= l == 3;
        }
    }

    std::vector<Vertex> parts[3];
    for (std::size_t v = 0; v < n; ++v) parts[lab.label[v] - 1].push_back(static_cast<Vertex>(v));
    lab.v1 = VertexSet(std::move(parts[0]));
    lab.v2 = VertexSet(std::move(parts[1]));
    lab.v3 = VertexSet(std::move(parts[2]));
    return lab;
}

TreeCells tree_cells(const TreeLabeling& lab) {
    const std::size_t n = lab.label.size();
    TreeCells cells;
    std::vector<int> index(n, -1);
    for (Vertex v : lab.postorder)
        if (lab.label[static_cast<std::size_t>(v)] == 2) {
            index[static_cast<std::size_t>(v)] = static_cast<int>(cells.anchors.size());
            cells.anchors.push_back(v);
        }
    const int last = static_cast<int>(cells.anchors.size()) - 1;
    cells.cell_of.assign(n, -1);
    // reverse post-order visits parents before children
    for (auto it = lab.postorder.rbegin(); it != lab.postorder.rend(); ++it) {
        const auto v = static_cast<std::size_t>(*it);
        if (index[v] >= 0)
            cells.cell_of[v] = index[v];
        else if (lab.parent[v] < 0)
            cells.cell_of[v] = last;
        else
            cells.cell_of[v] = cells.cell_of[static_cast<std::size_t>(lab.parent[v])];
    }
    std::vector<std::vector<Vertex>> members(cells.anchors.size());
    for (std::size_t v = 0; v < n; ++v) members[static_cast<std::size_t>(cells.cell_of[v])].push_back(static_cast<Vertex>(v));
    for (auto& m : members) cells.cells.emplace_back(std::move(m));
    return cells;
}

ReconfSequence transform_tree(const Graph& t, const TreeCells& cells, const VertexSet& d) {
    return transform_by_cells(t, cells, d);
}

}  // namespace dsr
