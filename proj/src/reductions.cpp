#include "dsr/reductions.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "dsr/domset.hpp"

namespace dsr {

bool is_vertex_cover(const Graph& g, const VertexSet& c) {
    check_members(g, c);
    for (auto [u, v] : g.edges())
        if (!c.contains(u) && !c.contains(v)) return false;
    return true;
}

void validate_vcr_instance(const VcrInstance& inst) {
    if (!is_vertex_cover(inst.graph, inst.source)) throw Error("source set is not a vertex cover");
    if (!is_vertex_cover(inst.graph, inst.target)) throw Error("target set is not a vertex cover");
    if (inst.k < 1) throw Error("threshold k must be positive");
    if (inst.k < std::max(inst.source.size(), inst.target.size()))
        throw Error("threshold k is below max(|Cs|, |Ct|)");
}

OracleResult vcr_oracle(const VcrInstance& inst, std::size_t budget) {
    validate_vcr_instance(inst);
    const Graph& g = inst.graph;
    if (g.n() > kOracleVertexLimit)
        throw Error("exhaustive search limited to n <= " + std::to_string(kOracleVertexLimit));
    std::vector<std::uint32_t> open(static_cast<std::size_t>(g.n()), 0);
    for (Vertex v = 0; v < g.n(); ++v)
        for (Vertex w : g.neighbors(v)) open[static_cast<std::size_t>(v)] |= 1u << w;
    // every vertex outside the set needs all its neighbours inside
    auto cover = [&](std::uint32_t mask) {
        for (Vertex v = 0; v < g.n(); ++v)
            if (!(mask >> v & 1u) && (open[static_cast<std::size_t>(v)] & ~mask)) return false;
        return true;
    };
    return reachability_bfs(g.n(), inst.source, inst.target, inst.k, cover, budget);
}

const Gadget* ReductionMap::find(Vertex v) const {
    if (v < original_n) return nullptr;
    auto it = std::lower_bound(gadgets.begin(), gadgets.end(), v, [](const Gadget& g, Vertex x) { return g.id < x; });
    return it != gadgets.end() && it->id == v ? &*it : nullptr;
}

namespace {

void require_cover_endpoints(const VcrInstance& inst) {
    validate_vcr_instance(inst);
    if (inst.graph.m() == 0) throw Error("reduction requires at least one edge");
}

}  // namespace

std::pair<DsrInstance, ReductionMap> reduce_vcr_to_dsr(const VcrInstance& inst) {
    require_cover_endpoints(inst);
    const Graph& src = inst.graph;
    for (Vertex v = 0; v < src.n(); ++v)
        if (src.degree(v) == 0)
            throw Error("vertex " + std::to_string(v + 1) + " is isolated and would stay undominated");
    ReductionMap map{src.n(), {}};
    std::vector<Edge> edges = src.edges();
    const auto original = edges;
    Vertex next = src.n();
    for (auto [u, w] : original) {
        map.gadgets.push_back({next, GadgetRole::EdgeVertex, u, w});
        edges.emplace_back(u, next);
        edges.emplace_back(next, w);
        ++next;
    }
    DsrInstance out{Graph(next, edges), inst.source, inst.target, inst.k};
    return {std::move(out), std::move(map)};
}

std::pair<DsrInstance, ReductionMap> reduce_vcr_to_split_dsr(const VcrInstance& inst) {
    require_cover_endpoints(inst);
    const Graph& src = inst.graph;
    ReductionMap map{src.n(), {}};
    std::vector<Edge> edges;
    for (Vertex a = 0; a < src.n(); ++a)
        for (Vertex b = a + 1; b < src.n(); ++b) edges.emplace_back(a, b);
    Vertex next = src.n();
    for (auto [u, w] : src.edges()) {
        map.gadgets.push_back({next, GadgetRole::EdgeVertex, u, w});
        edges.emplace_back(u, next);
        edges.emplace_back(w, next);
        ++next;
    }
    DsrInstance out{Graph(next, edges), inst.source, inst.target, inst.k};
    return {std::move(out), std::move(map)};
}

std::optional<SplitPartition> find_split_partition(const Graph& g) {
    std::vector<Vertex> order(static_cast<std::size_t>(g.n()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    std::size_t m = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
        if (g.degree(order[i]) >= i) m = i + 1;
    SplitPartition p{VertexSet(std::vector<Vertex>(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(m))),
                     VertexSet(std::vector<Vertex>(order.begin() + static_cast<std::ptrdiff_t>(m), order.end()))};
    if (!is_split_partition(g, p.clique, p.independent)) return std::nullopt;
    return p;
}

std::pair<DsrInstance, ReductionMap> reduce_split_to_bipartite_dsr(const DsrInstance& inst, const SplitPartition& split) {
    validate_instance(inst);
    const Graph& src = inst.graph;
    if (!is_split_partition(src, split.clique, split.independent))
        throw Error("graph is not split with the given clique/independent partition");
    if (!std::includes(split.clique.begin(), split.clique.end(), inst.source.begin(), inst.source.end()) ||
        !std::includes(split.clique.begin(), split.clique.end(), inst.target.begin(), inst.target.end()))
        throw Error("source and target must lie inside the clique side");

    const Vertex x = src.n(), y = src.n() + 1;
    std::vector<Edge> edges;
    for (auto [u, v] : src.edges())
        if (!(split.clique.contains(u) && split.clique.contains(v))) edges.emplace_back(u, v);
    edges.emplace_back(x, y);
    for (Vertex a : split.clique) edges.emplace_back(y, a);

    ReductionMap map{src.n(), {{x, GadgetRole::X}, {y, GadgetRole::Y}}};
    VertexSet s = inst.source, t = inst.target;
    s.insert(y);
    t.insert(y);
    DsrInstance out{Graph(src.n() + 2, edges), std::move(s), std::move(t), inst.k + 1};
    return {std::move(out), std::move(map)};
}

ReconfSequence normalize_sequence(const ReconfSequence& seq, const ReductionMap& map, const Graph& g) {
    for (const auto& gd : map.gadgets)
        if (gd.role != GadgetRole::EdgeVertex)
            throw Error("normalize_sequence supports edge gadgets only");
    for (const auto& d : apply(seq)) {
        check_members(g, d);
        if (!is_dominating(g, d)) throw Error("normalize_sequence: input is not a dominating-set sequence");
    }

    // count[v]: membership of v itself plus gadgets currently represented by v
    std::vector<int> count(static_cast<std::size_t>(g.n()), 0);
    std::vector<Vertex> rep_of(static_cast<std::size_t>(g.n()), -1);
    ReconfSequence out{VertexSet{}, {}};
    std::vector<Vertex> start;
    auto choose = [&](const Gadget& gd) {
        const bool u_in = count[static_cast<std::size_t>(gd.u)] > 0;
        const bool w_in = count[static_cast<std::size_t>(gd.w)] > 0;
        if (u_in != w_in) return u_in ? gd.u : gd.w;
        return std::min(gd.u, gd.w);
    };
    for (Vertex v : seq.start) {
        if (const Gadget* gd = map.find(v)) {
            rep_of[static_cast<std::size_t>(v)] = choose(*gd);
            v = rep_of[static_cast<std::size_t>(v)];
        }
        if (count[static_cast<std::size_t>(v)]++ == 0) start.push_back(v);
    }
    out.start = VertexSet(std::move(start));

    auto emit = [&](Move mv) {
        if (!out.moves.empty() && out.moves.back().vertex == mv.vertex && out.moves.back().kind != mv.kind) {
            out.moves.pop_back();
            return;
        }
        out.moves.push_back(mv);
    };
    for (const auto& mv : seq.moves) {
        Vertex v = mv.vertex;
        if (const Gadget* gd = map.find(v)) {
            if (mv.kind == MoveKind::Add) rep_of[static_cast<std::size_t>(v)] = choose(*gd);
            v = rep_of[static_cast<std::size_t>(v)];
        }
        int& c = count[static_cast<std::size_t>(v)];
        if (mv.kind == MoveKind::Add) {
            if (c++ == 0) emit(Move::add(v));
        } else {
            if (--c == 0) emit(Move::remove(v));
        }
    }
    return out;
}

}  // namespace dsr
