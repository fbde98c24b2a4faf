#include "dsr/canonical_cograph.hpp"

#include "dsr/domset.hpp"

namespace dsr {

CographCanonical cograph_canonical(const Graph& g, const Cotree& ct) {
    if (g.n() < 1) throw Error("cograph_canonical: empty graph");
    if (!is_connected(g)) throw Error("cograph_canonical: graph must be connected");
    CographCanonical out;
    for (Vertex v = 0; v < g.n(); ++v)
        if (g.degree(v) + 1 == static_cast<std::size_t>(g.n())) {
            out.a = v;
            out.canonical = VertexSet{v};
            return out;
        }
    if (!cotree_matches(ct, g)) throw Error("cograph_canonical: cotree does not match graph");
    const auto& root = ct.node(ct.root);
    if (root.kind != CotreeKind::Join) throw Error("cograph_canonical: connected cograph without root join");
    out.side_a = VertexSet(ct.leaves(root.children.front()));
    std::vector<Vertex> rest;
    for (std::size_t i = 1; i < root.children.size(); ++i) {
        auto l = ct.leaves(root.children[i]);
        rest.insert(rest.end(), l.begin(), l.end());
    }
    out.side_b = VertexSet(std::move(rest));
    out.a = out.side_a[0];
    out.b = out.side_b[0];
    out.canonical = VertexSet{out.a, out.b};
    return out;
}

ReconfSequence transform_cograph(const Graph& g, const CographCanonical& can, const VertexSet& d) {
    if (!is_dominating(g, d)) throw Error("transform requires a dominating set");
    ReconfSequence seq{d, {}};
    if (can.canonical.size() == 1) {
        const Vertex w = can.a;
        if (!d.contains(w)) seq.moves.push_back(Move::add(w));
        for (Vertex v : d)
            if (v != w) seq.moves.push_back(Move::remove(v));
        return seq;
    }

    // orient so that side 1 holds at least as many members of d as side 2
    Vertex a = can.a, b = can.b;
    const VertexSet* side1 = &can.side_a;
    const VertexSet* side2 = &can.side_b;
    if (set_intersection(d, can.side_a).size() < set_intersection(d, can.side_b).size()) {
        std::swap(a, b);
        std::swap(side1, side2);
    }
    if (d.size() < 2) throw Error("transform_cograph: dominating set smaller than canonical");

    VertexSet cur = d;
    auto push = [&](Move mv) {
        seq.moves.push_back(mv);
        if (mv.kind == MoveKind::Add)
            cur.insert(mv.vertex);
        else
            cur.erase(mv.vertex);
    };
    // (1)
    if (!cur.contains(b)) push(Move::add(b));
    // (2)
    const VertexSet in1 = set_intersection(d, *side1);
    if (in1.size() >= 2) {
        for (Vertex v : in1)
            if (v != a) {
                push(Move::remove(v));
                break;
            }
    } else {
        for (Vertex v : set_intersection(d, *side2))
            if (v != b) {
                push(Move::remove(v));
                break;
            }
    }
    // (3)
    if (!cur.contains(a)) push(Move::add(a));
    // (4)
    const VertexSet rest = cur;
    for (Vertex v : rest)
        if (v != a && v != b) push(Move::remove(v));
    return seq;
}

}  // namespace dsr
