#include "dsr/generators.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>

#include "dsr/domset.hpp"

namespace dsr {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace

StreamRng::StreamRng(std::uint64_t seed, std::string_view stream)
    : engine_(splitmix64(splitmix64(seed) ^ fnv1a(stream))) {}

std::int64_t StreamRng::uniform(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw Error("uniform: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do x = next();
    while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
}

bool StreamRng::coin(double p_true) {
    return static_cast<double>(next() >> 11) * 0x1.0p-53 < p_true;
}

const char* to_string(GenClass c) {
    switch (c) {
        case GenClass::Tree: return "tree";
        case GenClass::Interval: return "interval";
        case GenClass::Cograph: return "cograph";
        case GenClass::General: return "general";
        case GenClass::Vcr: return "vcr";
    }
    return "unknown";
}

const char* to_string(KPolicy p) {
    switch (p) {
        case KPolicy::Tight: return "tight";
        case KPolicy::Slack: return "slack";
        case KPolicy::Explicit: return "explicit";
    }
    return "unknown";
}

GenClass parse_gen_class(std::string_view s) {
    for (GenClass c : {GenClass::Tree, GenClass::Interval, GenClass::Cograph, GenClass::General, GenClass::Vcr})
        if (s == to_string(c)) return c;
    throw Error("unknown generator class '" + std::string(s) + "'");
}

KPolicy parse_k_policy(std::string_view s) {
    for (KPolicy p : {KPolicy::Tight, KPolicy::Slack, KPolicy::Explicit})
        if (s == to_string(p)) return p;
    throw Error("unknown k policy '" + std::string(s) + "'");
}

Graph random_tree(Vertex n, StreamRng& rng) {
    if (n < 1) throw Error("random_tree: n must be positive");
    if (n == 1) return Graph(1);
    if (n == 2) return Graph(2, {{0, 1}});
    // decode a uniform Pruefer sequence
    std::vector<Vertex> code(static_cast<std::size_t>(n - 2));
    for (auto& c : code) c = static_cast<Vertex>(rng.uniform(0, n - 1));
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (Vertex c : code) ++degree[static_cast<std::size_t>(c)];
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
    for (Vertex v = 0; v < n; ++v)
        if (degree[static_cast<std::size_t>(v)] == 1) leaves.push(v);
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n - 1));
    for (Vertex c : code) {
        Vertex leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(leaf, c);
        if (--degree[static_cast<std::size_t>(c)] == 1) leaves.push(c);
    }
    Vertex a = leaves.top();
    leaves.pop();
    edges.emplace_back(a, leaves.top());
    return Graph(n, edges);
}

IntervalRepresentation random_intervals(Vertex n, bool connected, double length_scale, StreamRng& rng) {
    if (n < 1) throw Error("random_intervals: n must be positive");
    const std::int64_t max_len = std::max<std::int64_t>(1, std::llround(length_scale * 40.0));
    const std::int64_t max_step = 10;
    std::vector<std::pair<std::int64_t, std::int64_t>> raw;
    std::int64_t prev_left = 0, reach = 0;
    for (Vertex i = 0; i < n; ++i) {
        std::int64_t l;
        if (!connected)
            l = rng.uniform(0, max_step * n);
        else if (i == 0)
            l = 0;
        else
            l = rng.uniform(prev_left, std::min(reach, prev_left + max_step));
        const std::int64_t r = l + rng.uniform(0, max_len);
        raw.emplace_back(l, r);
        prev_left = l;
        reach = i == 0 ? r : std::max(reach, r);
    }
    // rank-compress endpoints to distinct integers; at equal values lefts go
    // first so touching intervals keep intersecting
    struct Point {
        std::int64_t value;
        int side;  // 0 = left, 1 = right
        std::size_t owner;
    };
    std::vector<Point> pts;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        pts.push_back({raw[i].first, 0, i});
        pts.push_back({raw[i].second, 1, i});
    }
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
        return std::tie(a.value, a.side, a.owner) < std::tie(b.value, b.side, b.owner);
    });
    std::vector<Vertex> relabel(static_cast<std::size_t>(n));
    std::iota(relabel.begin(), relabel.end(), 0);
    rng.shuffle(relabel);
    IntervalRepresentation rep;
    rep.intervals.resize(static_cast<std::size_t>(n));
    for (std::size_t rank = 0; rank < pts.size(); ++rank) {
        auto& iv = rep.intervals[static_cast<std::size_t>(relabel[pts[rank].owner])];
        (pts[rank].side == 0 ? iv.left : iv.right) = Rational(static_cast<long long>(rank));
    }
    return rep;
}

Cotree random_cotree(Vertex n, bool connected, StreamRng& rng) {
    if (n < 1) throw Error("random_cotree: n must be positive");
    std::vector<Vertex> leaves(static_cast<std::size_t>(n));
    std::iota(leaves.begin(), leaves.end(), 0);
    rng.shuffle(leaves);
    Cotree ct;
    auto build = [&](auto&& self, std::vector<Vertex> part, CotreeKind kind) -> int {
        const int idx = static_cast<int>(ct.nodes.size());
        ct.nodes.emplace_back();
        if (part.size() == 1) {
            ct.nodes[static_cast<std::size_t>(idx)] = CotreeNode{CotreeKind::Leaf, part.front(), {}};
            return idx;
        }
        const auto size = static_cast<std::int64_t>(part.size());
        const std::int64_t fan = rng.uniform(2, std::min<std::int64_t>(size, 4));
        // fan - 1 distinct cut points in 1..size-1
        std::vector<std::int64_t> cuts(static_cast<std::size_t>(size - 1));
        std::iota(cuts.begin(), cuts.end(), 1);
        rng.shuffle(cuts);
        cuts.resize(static_cast<std::size_t>(fan - 1));
        std::sort(cuts.begin(), cuts.end());
        cuts.push_back(size);
        const CotreeKind child_kind = kind == CotreeKind::Join ? CotreeKind::Union : CotreeKind::Join;
        std::vector<std::pair<Vertex, int>> keyed;
        std::int64_t from = 0;
        for (std::int64_t to : cuts) {
            std::vector<Vertex> sub(part.begin() + from, part.begin() + to);
            const Vertex low = *std::min_element(sub.begin(), sub.end());
            keyed.emplace_back(low, self(self, std::move(sub), child_kind));
            from = to;
        }
        std::sort(keyed.begin(), keyed.end());
        std::vector<int> children;
        for (auto [low, c] : keyed) children.push_back(c);
        ct.nodes[static_cast<std::size_t>(idx)] = CotreeNode{kind, -1, std::move(children)};
        return idx;
    };
    const CotreeKind root_kind = connected || rng.coin() ? CotreeKind::Join : CotreeKind::Union;
    ct.root = build(build, std::move(leaves), root_kind);
    return ct;
}

Graph random_graph(Vertex n, double p, StreamRng& rng) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.coin(p)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

namespace {

std::vector<Vertex> shuffled(Vertex n, StreamRng& rng) {
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    return order;
}

void pad(std::vector<char>& in, Vertex n, double pad_probability, StreamRng& rng) {
    if (!rng.coin(pad_probability)) return;
    std::vector<Vertex> outside;
    for (Vertex v = 0; v < n; ++v)
        if (!in[static_cast<std::size_t>(v)]) outside.push_back(v);
    if (outside.empty()) return;
    rng.shuffle(outside);
    const auto extra = rng.uniform(1, std::min<std::int64_t>(3, static_cast<std::int64_t>(outside.size())));
    for (std::int64_t i = 0; i < extra; ++i) in[static_cast<std::size_t>(outside[static_cast<std::size_t>(i)])] = 1;
}

VertexSet members(const std::vector<char>& in) {
    std::vector<Vertex> ids;
    for (std::size_t v = 0; v < in.size(); ++v)
        if (in[v]) ids.push_back(static_cast<Vertex>(v));
    return VertexSet(std::move(ids));
}

}  // namespace

VertexSet random_dominating_set(const Graph& g, double pad_probability, StreamRng& rng) {
    const Vertex n = g.n();
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    std::vector<int> count(static_cast<std::size_t>(n), 0);
    auto add_vertex = [&](Vertex w) {
        in[static_cast<std::size_t>(w)] = 1;
        ++count[static_cast<std::size_t>(w)];
        for (Vertex u : g.neighbors(w)) ++count[static_cast<std::size_t>(u)];
    };
    // greedy: dominate each uncovered vertex by a random member of its closed neighbourhood
    for (Vertex v : shuffled(n, rng)) {
        if (count[static_cast<std::size_t>(v)] > 0) continue;
        auto nb = g.neighbors(v);
        const auto pick = rng.uniform(0, static_cast<std::int64_t>(nb.size()));
        add_vertex(pick == static_cast<std::int64_t>(nb.size()) ? v : nb[static_cast<std::size_t>(pick)]);
    }
    // prune to a minimal dominating set
    for (Vertex w : shuffled(n, rng)) {
        if (!in[static_cast<std::size_t>(w)] || count[static_cast<std::size_t>(w)] < 2) continue;
        bool deletable = true;
        for (Vertex u : g.neighbors(w))
            if (count[static_cast<std::size_t>(u)] < 2) deletable = false;
        if (!deletable) continue;
        in[static_cast<std::size_t>(w)] = 0;
        --count[static_cast<std::size_t>(w)];
        for (Vertex u : g.neighbors(w)) --count[static_cast<std::size_t>(u)];
    }
    pad(in, n, pad_probability, rng);
    return members(in);
}

VertexSet random_vertex_cover(const Graph& g, double pad_probability, StreamRng& rng) {
    const Vertex n = g.n();
    std::vector<char> in(static_cast<std::size_t>(n), 1);
    for (Vertex v : shuffled(n, rng)) {
        bool removable = true;
        for (Vertex u : g.neighbors(v))
            if (!in[static_cast<std::size_t>(u)]) removable = false;
        if (removable) in[static_cast<std::size_t>(v)] = 0;
    }
    pad(in, n, pad_probability, rng);
    return members(in);
}

namespace {

std::size_t pick_k(const GenSpec& spec, std::size_t top) {
    switch (spec.k_policy) {
        case KPolicy::Tight: return std::max<std::size_t>(top, 1);
        case KPolicy::Slack: return top + 1;
        case KPolicy::Explicit:
            if (spec.explicit_k < std::max<std::size_t>(top, 1))
                throw Error("explicit k " + std::to_string(spec.explicit_k) + " is below max endpoint size " +
                            std::to_string(top));
            return spec.explicit_k;
    }
    return top;
}

Graph random_vcr_graph(Vertex n, double ratio, StreamRng& rng) {
    if (n < 2) throw Error("vcr generation needs n >= 2");
    const auto pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
    const auto target = std::clamp<std::int64_t>(std::llround(ratio * n), 1, pairs);
    std::vector<Edge> all;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) all.emplace_back(u, v);
    rng.shuffle(all);
    std::vector<Edge> edges(all.begin(), all.begin() + target);
    // attach isolated vertices so every vertex is covered by some edge
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : edges) ++degree[static_cast<std::size_t>(u)], ++degree[static_cast<std::size_t>(v)];
    for (Vertex v = 0; v < n; ++v)
        if (degree[static_cast<std::size_t>(v)] == 0) {
            Vertex u = static_cast<Vertex>(rng.uniform(0, n - 2));
            if (u >= v) ++u;
            edges.emplace_back(v, u);
            ++degree[static_cast<std::size_t>(v)], ++degree[static_cast<std::size_t>(u)];
        }
    return Graph(n, edges);
}

}  // namespace

Generated generate(const GenSpec& spec) {
    if (spec.n < 1) throw Error("generate: n must be positive");
    StreamRng shape(spec.seed, "graph");
    StreamRng src(spec.seed, "source");
    StreamRng dst(spec.seed, "target");

    if (spec.cls == GenClass::Vcr) {
        Graph g = random_vcr_graph(spec.n, spec.density, shape);
        VertexSet s = random_vertex_cover(g, spec.pad_probability, src);
        VertexSet t = random_vertex_cover(g, spec.pad_probability, dst);
        const std::size_t k = pick_k(spec, std::max(s.size(), t.size()));
        return GeneratedVcr{VcrInstance{std::move(g), std::move(s), std::move(t), k}};
    }

    GeneratedDsr out;
    Graph g;
    switch (spec.cls) {
        case GenClass::Tree:
            g = random_tree(spec.n, shape);
            out.evidence = ClassEvidence::tree();
            break;
        case GenClass::Interval: {
            auto rep = random_intervals(spec.n, spec.connected, spec.density, shape);
            g = interval_graph(rep);
            out.evidence = ClassEvidence::interval(std::move(rep));
            break;
        }
        case GenClass::Cograph: {
            auto ct = random_cotree(spec.n, spec.connected, shape);
            g = evaluate_cotree(ct, spec.n);
            out.evidence = ClassEvidence::cograph(std::move(ct));
            break;
        }
        case GenClass::General:
            g = random_graph(spec.n, spec.density, shape);
            break;
        case GenClass::Vcr:
            break;
    }
    VertexSet s = random_dominating_set(g, spec.pad_probability, src);
    VertexSet t = random_dominating_set(g, spec.pad_probability, dst);
    const std::size_t k = pick_k(spec, std::max(s.size(), t.size()));
    out.instance = DsrInstance{std::move(g), std::move(s), std::move(t), k};
    return out;
}

}  // namespace dsr
