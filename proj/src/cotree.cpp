#include "dsr/cotree.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace dsr {

namespace {

// Scratch marks indexed by vertex; a mark equals `stamp` when set.
struct Marks {
    std::vector<std::uint32_t> value;
    std::uint32_t stamp = 0;

    explicit Marks(Vertex n) : value(static_cast<std::size_t>(n), 0) {}
    std::uint32_t next() { return ++stamp; }
    bool is(Vertex v, std::uint32_t s) const { return value[static_cast<std::size_t>(v)] == s; }
    void set(Vertex v, std::uint32_t s) { value[static_cast<std::size_t>(v)] = s; }
};

// Components of G[part], each sorted; ordered by smallest member.
std::vector<std::vector<Vertex>> components_within(const Graph& g, const std::vector<Vertex>& part,
                                                   std::vector<int>& owner, int tag, Marks& seen) {
    for (Vertex v : part) owner[static_cast<std::size_t>(v)] = tag;
    std::uint32_t s = seen.next();
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> stack;
    for (Vertex start : part) {
        if (seen.is(start, s)) continue;
        std::vector<Vertex> comp;
        seen.set(start, s);
        stack.push_back(start);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (Vertex w : g.neighbors(u))
                if (owner[static_cast<std::size_t>(w)] == tag && !seen.is(w, s)) {
                    seen.set(w, s);
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

// Components of the complement of G[part]; O(|part| + edges inside part).
std::vector<std::vector<Vertex>> co_components_within(const Graph& g, const std::vector<Vertex>& part,
                                                      Marks& adjacent) {
    std::vector<Vertex> unvisited = part;
    std::vector<std::vector<Vertex>> out;
    while (!unvisited.empty()) {
        std::vector<Vertex> comp{unvisited.front()};
        unvisited.erase(unvisited.begin());
        for (std::size_t qi = 0; qi < comp.size() && !unvisited.empty(); ++qi) {
            std::uint32_t s = adjacent.next();
            for (Vertex w : g.neighbors(comp[qi])) adjacent.set(w, s);
            std::vector<Vertex> keep;
            for (Vertex w : unvisited) {
                if (adjacent.is(w, s))
                    keep.push_back(w);
                else
                    comp.push_back(w);
            }
            unvisited.swap(keep);
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Any graph that is connected and co-connected on >= 2 vertices contains an
// induced P4; scan middle edges b-c for end points a, d.
NotCograph find_p4(const Graph& g, const std::vector<Vertex>& part, const std::vector<int>& owner, int tag) {
    auto inside = [&](Vertex v) { return owner[static_cast<std::size_t>(v)] == tag; };
    for (Vertex b : part)
        for (Vertex c : g.neighbors(b)) {
            if (!inside(c)) continue;
            for (Vertex a : g.neighbors(b)) {
                if (a == c || !inside(a) || g.has_edge(a, c)) continue;
                for (Vertex d : g.neighbors(c)) {
                    if (d == b || !inside(d) || g.has_edge(d, b) || g.has_edge(a, d)) continue;
                    return NotCograph{{a, b, c, d}};
                }
            }
        }
    throw Error("internal: prime part without induced P4");
}

}  // namespace

std::vector<Vertex> Cotree::leaves(int i) const {
    std::vector<Vertex> out;
    std::vector<int> stack{i};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        const auto& nd = node(x);
        if (nd.kind == CotreeKind::Leaf) {
            out.push_back(nd.leaf);
            continue;
        }
        for (auto it = nd.children.rbegin(); it != nd.children.rend(); ++it) stack.push_back(*it);
    }
    return out;
}

std::variant<Cotree, NotCograph> cotree_decompose(const Graph& g) {
    Cotree ct;
    if (g.n() == 0) return ct;
    Marks seen(g.n()), adjacent(g.n());
    std::vector<int> owner(static_cast<std::size_t>(g.n()), -1);
    int tag = 0;

    std::vector<Vertex> all(static_cast<std::size_t>(g.n()));
    for (Vertex v = 0; v < g.n(); ++v) all[static_cast<std::size_t>(v)] = v;

    struct Work {
        std::vector<Vertex> part;
        int node;
    };
    ct.nodes.emplace_back();
    ct.root = 0;
    std::vector<Work> stack;
    stack.push_back({std::move(all), 0});
    while (!stack.empty()) {
        Work w = std::move(stack.back());
        stack.pop_back();
        if (w.part.size() == 1) {
            ct.nodes[static_cast<std::size_t>(w.node)] = CotreeNode{CotreeKind::Leaf, w.part.front(), {}};
            continue;
        }
        ++tag;
        auto parts = components_within(g, w.part, owner, tag, seen);
        CotreeKind kind = CotreeKind::Union;
        if (parts.size() == 1) {
            parts = co_components_within(g, w.part, adjacent);
            kind = CotreeKind::Join;
            if (parts.size() == 1) return find_p4(g, w.part, owner, tag);
        }
        std::vector<int> children;
        for (auto& p : parts) {
            int idx = static_cast<int>(ct.nodes.size());
            ct.nodes.emplace_back();
            children.push_back(idx);
            stack.push_back({std::move(p), idx});
        }
        ct.nodes[static_cast<std::size_t>(w.node)] = CotreeNode{kind, -1, std::move(children)};
    }
    return ct;
}

Graph evaluate_cotree(const Cotree& ct, Vertex n) {
    std::vector<Edge> edges;
    for (const auto& nd : ct.nodes) {
        if (nd.kind != CotreeKind::Join) continue;
        std::vector<std::vector<Vertex>> sides;
        for (int c : nd.children) sides.push_back(ct.leaves(c));
        for (std::size_t i = 0; i < sides.size(); ++i)
            for (std::size_t j = i + 1; j < sides.size(); ++j)
                for (Vertex u : sides[i])
                    for (Vertex v : sides[j]) edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

bool is_canonical_cotree(const Cotree& ct, Vertex n) {
    if (n == 0) return ct.nodes.empty() || ct.root < 0;
    if (ct.root < 0 || static_cast<std::size_t>(ct.root) >= ct.nodes.size()) return false;
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    std::vector<std::pair<int, CotreeKind>> stack{{ct.root, CotreeKind::Leaf}};
    std::size_t visited = 0;
    while (!stack.empty()) {
        auto [x, parent_kind] = stack.back();
        stack.pop_back();
        if (x < 0 || static_cast<std::size_t>(x) >= ct.nodes.size()) return false;
        if (++visited > ct.nodes.size()) return false;  // cycle
        const auto& nd = ct.node(x);
        if (nd.kind == CotreeKind::Leaf) {
            if (nd.leaf < 0 || nd.leaf >= n || seen[static_cast<std::size_t>(nd.leaf)]++) return false;
            continue;
        }
        if (nd.children.size() < 2 || nd.kind == parent_kind) return false;
        for (int c : nd.children) stack.emplace_back(c, nd.kind);
    }
    return std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
}

bool cotree_matches(const Cotree& ct, const Graph& g) {
    const Vertex n = g.n();
    if (!is_canonical_cotree(ct, n)) return false;
    if (n == 0) return true;
    const std::size_t nodes = ct.nodes.size();
    std::vector<int> parent(nodes, -1), depth(nodes, 0);
    std::vector<std::size_t> count(nodes, 0);
    std::vector<int> leaf_node(static_cast<std::size_t>(n), -1);
    std::vector<int> order{ct.root};
    for (std::size_t i = 0; i < order.size(); ++i) {
        int x = order[i];
        const auto& nd = ct.node(x);
        if (nd.kind == CotreeKind::Leaf) leaf_node[static_cast<std::size_t>(nd.leaf)] = x;
        for (int c : nd.children) {
            parent[static_cast<std::size_t>(c)] = x;
            depth[static_cast<std::size_t>(c)] = depth[static_cast<std::size_t>(x)] + 1;
            order.push_back(c);
        }
    }
    std::size_t join_pairs = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const auto& nd = ct.node(*it);
        auto& cnt = count[static_cast<std::size_t>(*it)];
        if (nd.kind == CotreeKind::Leaf) {
            cnt = 1;
            continue;
        }
        std::size_t squares = 0;
        for (int c : nd.children) {
            cnt += count[static_cast<std::size_t>(c)];
            squares += count[static_cast<std::size_t>(c)] * count[static_cast<std::size_t>(c)];
        }
        if (nd.kind == CotreeKind::Join) join_pairs += (cnt * cnt - squares) / 2;
    }
    if (join_pairs != g.m()) return false;
    for (auto [u, v] : g.edges()) {
        int a = leaf_node[static_cast<std::size_t>(u)], b = leaf_node[static_cast<std::size_t>(v)];
        while (depth[static_cast<std::size_t>(a)] > depth[static_cast<std::size_t>(b)]) a = parent[static_cast<std::size_t>(a)];
        while (depth[static_cast<std::size_t>(b)] > depth[static_cast<std::size_t>(a)]) b = parent[static_cast<std::size_t>(b)];
        while (a != b) {
            a = parent[static_cast<std::size_t>(a)];
            b = parent[static_cast<std::size_t>(b)];
        }
        if (ct.node(a).kind != CotreeKind::Join) return false;
    }
    return true;
}

Cotree extract_subtree(const Cotree& ct, int node, const std::vector<Vertex>& relabel) {
    Cotree out;
    out.root = 0;
    out.nodes.emplace_back();
    std::vector<std::pair<int, int>> stack{{node, 0}};
    while (!stack.empty()) {
        auto [src, dst] = stack.back();
        stack.pop_back();
        const auto& nd = ct.node(src);
        CotreeNode copy{nd.kind, -1, {}};
        if (nd.kind == CotreeKind::Leaf) copy.leaf = relabel[static_cast<std::size_t>(nd.leaf)];
        for (int c : nd.children) {
            int idx = static_cast<int>(out.nodes.size());
            out.nodes.emplace_back();
            copy.children.push_back(idx);
            stack.emplace_back(c, idx);
        }
        out.nodes[static_cast<std::size_t>(dst)] = std::move(copy);
    }
    return out;
}

std::string format_cotree(const Cotree& ct) {
    if (ct.root < 0) return "";
    std::ostringstream os;
    auto rec = [&](auto&& self, int x) -> void {
        const auto& nd = ct.node(x);
        if (nd.kind == CotreeKind::Leaf) {
            os << nd.leaf + 1;
            return;
        }
        os << (nd.kind == CotreeKind::Join ? 'J' : 'U') << '(';
        for (std::size_t i = 0; i < nd.children.size(); ++i) {
            if (i) os << ' ';
            self(self, nd.children[i]);
        }
        os << ')';
    };
    rec(rec, ct.root);
    return os.str();
}

Cotree parse_cotree(const std::string& text) {
    Cotree ct;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto fail = [&](const std::string& msg) -> Error {
        return Error("cotree: " + msg + " at offset " + std::to_string(pos));
    };
    auto rec = [&](auto&& self) -> int {
        skip();
        if (pos >= text.size()) throw fail("unexpected end");
        int idx = static_cast<int>(ct.nodes.size());
        ct.nodes.emplace_back();
        char c = text[pos];
        if (c == 'J' || c == 'U') {
            ++pos;
            skip();
            if (pos >= text.size() || text[pos] != '(') throw fail("expected '('");
            ++pos;
            std::vector<int> children;
            for (;;) {
                skip();
                if (pos < text.size() && text[pos] == ')') {
                    ++pos;
                    break;
                }
                children.push_back(self(self));
            }
            ct.nodes[static_cast<std::size_t>(idx)] =
                CotreeNode{c == 'J' ? CotreeKind::Join : CotreeKind::Union, -1, std::move(children)};
            return idx;
        }
        if (!std::isdigit(static_cast<unsigned char>(c))) throw fail("expected leaf id");
        long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos++] - '0');
            if (v > (1L << 30)) throw fail("leaf id too large");
        }
        if (v < 1) throw fail("leaf ids are 1-based");
        ct.nodes[static_cast<std::size_t>(idx)] = CotreeNode{CotreeKind::Leaf, static_cast<Vertex>(v - 1), {}};
        return idx;
    };
    ct.root = rec(rec);
    skip();
    if (pos != text.size()) throw fail("trailing characters");
    return ct;
}

}  // namespace dsr
