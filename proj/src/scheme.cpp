#include "dsr/scheme.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <unordered_set>

#include "dsr/canonical_cograph.hpp"
#include "dsr/canonical_interval.hpp"
#include "dsr/canonical_tree.hpp"
#include "dsr/domset.hpp"

namespace dsr {

const char* to_string(GraphClass c) {
    switch (c) {
        case GraphClass::Tree: return "tree";
        case GraphClass::Interval: return "interval";
        case GraphClass::Cograph: return "cograph";
    }
    return "unknown";
}

const char* to_string(Answer a) { return a == Answer::Yes ? "YES" : "NO"; }

const char* to_string(Reason r) {
    switch (r) {
        case Reason::EqualEndpoints: return "EQUAL_ENDPOINTS";
        case Reason::SlackK: return "SLACK_K";
        case Reason::NonminimalEndpoints: return "NONMINIMAL_ENDPOINTS";
        case Reason::MinimalEndpointAtK: return "MINIMAL_ENDPOINT_AT_K";
    }
    return "UNKNOWN";
}

void check_evidence(const Graph& g, ClassEvidence& ev) {
    switch (ev.cls) {
        case GraphClass::Tree:
            if (!is_forest(g)) throw UnsupportedClass("graph is not a forest");
            return;
        case GraphClass::Cograph:
            if (!ev.cotree) {
                auto res = cotree_decompose(g);
                if (auto* bad = std::get_if<NotCograph>(&res)) {
                    const auto& w = bad->witness;
                    throw UnsupportedClass("graph is not a cograph: induced P4 " + std::to_string(w[0] + 1) + "-" +
                                           std::to_string(w[1] + 1) + "-" + std::to_string(w[2] + 1) + "-" +
                                           std::to_string(w[3] + 1));
                }
                ev.cotree = std::get<Cotree>(std::move(res));
            } else if (!cotree_matches(*ev.cotree, g)) {
                throw UnsupportedClass("cotree does not evaluate to the graph");
            }
            return;
        case GraphClass::Interval:
            if (!ev.rep) throw UnsupportedClass("interval class requires a representation");
            try {
                if (!validate_interval_representation(g, *ev.rep))
                    throw UnsupportedClass("interval representation does not match the graph");
            } catch (const UnsupportedClass&) {
                throw;
            } catch (const Error& e) {
                throw UnsupportedClass(e.what());
            }
            return;
    }
}

Decision decide(const DsrInstance& inst, ClassEvidence ev) {
    validate_instance(inst);
    check_evidence(inst.graph, ev);
    if (inst.source == inst.target) return {Answer::Yes, Reason::EqualEndpoints};
    const std::size_t top = std::max(inst.source.size(), inst.target.size());
    if (inst.k >= top + 1) return {Answer::Yes, Reason::SlackK};
    for (const VertexSet* d : {&inst.source, &inst.target})
        if (d->size() == inst.k && is_minimal(inst.graph, *d)) return {Answer::No, Reason::MinimalEndpointAtK};
    return {Answer::Yes, Reason::NonminimalEndpoints};
}

ClassSolver compose_components(std::vector<ComponentPart> parts, Vertex n) {
    std::vector<int> part_of(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> local(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> canonical;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        const auto& vs = parts[p].vertices;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (part_of[static_cast<std::size_t>(vs[i])] != -1) throw Error("compose_components: parts overlap");
            part_of[static_cast<std::size_t>(vs[i])] = static_cast<int>(p);
            local[static_cast<std::size_t>(vs[i])] = static_cast<Vertex>(i);
        }
        for (Vertex c : parts[p].solver.canonical) canonical.push_back(vs[static_cast<std::size_t>(c)]);
    }
    if (std::find(part_of.begin(), part_of.end(), -1) != part_of.end())
        throw Error("compose_components: parts do not cover the graph");

    ClassSolver out;
    out.canonical = VertexSet(std::move(canonical));
    out.transform = [parts = std::move(parts), part_of = std::move(part_of), local = std::move(local)](const VertexSet& d) {
        std::vector<std::vector<Vertex>> split(parts.size());
        for (Vertex v : d) split[static_cast<std::size_t>(part_of[static_cast<std::size_t>(v)])].push_back(local[static_cast<std::size_t>(v)]);
        ReconfSequence seq{d, {}};
        for (std::size_t p = 0; p < parts.size(); ++p) {
            auto sub = parts[p].solver.transform(VertexSet(std::move(split[p])));
            for (const auto& mv : sub.moves)
                seq.moves.push_back({mv.kind, parts[p].vertices[static_cast<std::size_t>(mv.vertex)]});
        }
        return seq;
    };
    return out;
}

namespace {

ClassSolver tree_solver(Graph t) {
    auto lab = label_tree(t);
    ClassSolver s;
    s.canonical = lab.v2;
    s.transform = [t = std::move(t), cells = tree_cells(lab)](const VertexSet& d) { return transform_tree(t, cells, d); };
    return s;
}

ClassSolver interval_solver(Graph g, const IntervalRepresentation& rep) {
    auto lab = label_interval(g, rep);
    ClassSolver s;
    s.canonical = lab.v2;
    s.transform = [g = std::move(g), cells = interval_cells(lab, rep)](const VertexSet& d) {
        return transform_interval(g, cells, d);
    };
    return s;
}

ClassSolver cograph_solver(Graph g, const Cotree& ct) {
    auto can = cograph_canonical(g, ct);
    ClassSolver s;
    s.canonical = can.canonical;
    s.transform = [g = std::move(g), can = std::move(can)](const VertexSet& d) { return transform_cograph(g, can, d); };
    return s;
}

}  // namespace

ClassSolver build_class_solver(const Graph& g, ClassEvidence ev) {
    check_evidence(g, ev);
    const auto comps = connected_components(g);

    // cotree node for each component: the root itself, or a child of a root union
    std::vector<int> comp_node;
    std::vector<int> comp_of(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (Vertex v : comps[c]) comp_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
    if (ev.cls == GraphClass::Cograph && g.n() > 0) {
        const Cotree& ct = *ev.cotree;
        comp_node.assign(comps.size(), -1);
        if (comps.size() == 1) {
            comp_node[0] = ct.root;
        } else {
            for (int child : ct.node(ct.root).children) {
                Vertex any = ct.leaves(child).front();
                comp_node[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(any)])] = child;
            }
        }
    }

    std::vector<Vertex> relabel(static_cast<std::size_t>(g.n()), -1);
    std::vector<ComponentPart> parts;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        ComponentPart part;
        part.vertices = comps[c].ids();
        for (std::size_t i = 0; i < part.vertices.size(); ++i)
            relabel[static_cast<std::size_t>(part.vertices[i])] = static_cast<Vertex>(i);
        Graph sub = induced_subgraph(g, part.vertices);
        switch (ev.cls) {
            case GraphClass::Tree:
                part.solver = tree_solver(std::move(sub));
                break;
            case GraphClass::Interval:
                part.solver = interval_solver(std::move(sub), restrict_representation(*ev.rep, part.vertices));
                break;
            case GraphClass::Cograph:
                part.solver = cograph_solver(std::move(sub), extract_subtree(*ev.cotree, comp_node[c], relabel));
                break;
        }
        parts.push_back(std::move(part));
    }
    return compose_components(std::move(parts), g.n());
}

namespace {

// Moves from d to the canonical set, first shedding one deletable vertex
// when d already sits at the threshold. The shed vertex is taken outside the
// canonical set if possible, else from the opposite endpoint `other`, and
// never equal to `avoid` when there is a choice.
ReconfSequence towards_canonical(const DsrInstance& inst, const ClassSolver& solver, const VertexSet& d,
                                 const VertexSet& other, std::optional<Vertex> avoid) {
    if (d.size() < inst.k) return solver.transform(d);
    const VertexSet deletable = deletable_vertices(inst.graph, d);
    if (deletable.empty()) throw Error("internal: minimal endpoint at threshold on a YES instance");
    auto pick = [&](auto&& ok) -> std::optional<Vertex> {
        for (Vertex v : deletable)
            if (ok(v)) return v;
        return std::nullopt;
    };
    std::optional<Vertex> choice = pick([&](Vertex v) { return !solver.canonical.contains(v); });
    if (!choice) choice = pick([&](Vertex v) { return other.contains(v) && v != avoid; });
    if (!choice) choice = pick([&](Vertex v) { return v != avoid; });
    const Vertex x = choice.value_or(deletable[0]);
    VertexSet rest = d;
    rest.erase(x);
    ReconfSequence head{d, {Move::remove(x)}};
    return concatenate(head, solver.transform(rest));
}

ReconfSequence cancel_inverse_pairs(const ReconfSequence& seq) {
    ReconfSequence out{seq.start, {}};
    for (const auto& mv : seq.moves) {
        if (!out.moves.empty() && out.moves.back().vertex == mv.vertex && out.moves.back().kind != mv.kind)
            out.moves.pop_back();
        else
            out.moves.push_back(mv);
    }
    return out;
}

// Walk from one dominating set to another touching each vertex of the
// symmetric difference exactly once. Depth-first over move orders (removals
// first, then additions that unlock the most removals), with dead states
// memoized and the number of expanded states capped.
std::optional<std::vector<Move>> direct_path(const Graph& g, std::size_t k, const VertexSet& from, const VertexSet& to,
                                             std::size_t budget = 20000) {
    std::vector<Vertex> drop = set_difference(from, to).ids(), gain = set_difference(to, from).ids();
    if (drop.size() + gain.size() > 64) return std::nullopt;
    std::vector<std::uint32_t> hits(static_cast<std::size_t>(g.n()), 0);
    auto bump = [&](Vertex v, int delta) {
        hits[static_cast<std::size_t>(v)] += static_cast<std::uint32_t>(delta);
        for (Vertex w : g.neighbors(v)) hits[static_cast<std::size_t>(w)] += static_cast<std::uint32_t>(delta);
    };
    auto removable = [&](Vertex v) {
        if (hits[static_cast<std::size_t>(v)] < 2) return false;
        for (Vertex w : g.neighbors(v))
            if (hits[static_cast<std::size_t>(w)] < 2) return false;
        return true;
    };
    for (Vertex v : from) bump(v, 1);
    const std::size_t nd = drop.size(), total = nd + gain.size();
    const std::uint64_t full = total == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << total) - 1;
    std::unordered_set<std::uint64_t> dead;
    std::vector<Move> moves;
    std::size_t expanded = 0;
    std::function<bool(std::uint64_t, std::size_t)> dfs = [&](std::uint64_t done, std::size_t size) {
        if (done == full) return true;
        if (dead.contains(done) || ++expanded > budget) return false;
        std::vector<std::pair<long, std::size_t>> options;
        for (std::size_t i = 0; i < nd; ++i)
            if (!(done >> i & 1) && removable(drop[i])) options.push_back({-1, i});
        if (size < k)
            for (std::size_t i = nd; i < total; ++i) {
                if (done >> i & 1) continue;
                bump(gain[i - nd], 1);
                long score = 0;
                for (std::size_t j = 0; j < nd; ++j)
                    if (!(done >> j & 1) && removable(drop[j])) ++score;
                bump(gain[i - nd], -1);
                options.push_back({-score, i});
            }
        std::stable_sort(options.begin(), options.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto [score, i] : options) {
            const bool add = i >= nd;
            const Vertex v = add ? gain[i - nd] : drop[i];
            bump(v, add ? 1 : -1);
            moves.push_back(add ? Move::add(v) : Move::remove(v));
            if (dfs(done | std::uint64_t{1} << i, add ? size + 1 : size - 1)) return true;
            moves.pop_back();
            bump(v, add ? -1 : 1);
            if (expanded > budget) return false;
        }
        dead.insert(done);
        return false;
    };
    if (!dfs(0, from.size())) return std::nullopt;
    return moves;
}

std::vector<std::size_t> positions(const ReconfSequence& seq, Vertex v) {
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i < seq.moves.size(); ++i)
        if (seq.moves[i].vertex == v) pos.push_back(i);
    return pos;
}

VertexSet set_at(const ReconfSequence& seq, std::size_t i) {
    ReconfSequence prefix{seq.start, {seq.moves.begin(), seq.moves.begin() + static_cast<std::ptrdiff_t>(i)}};
    return final_set(prefix);
}

// Shortens vertices touched more than twice: first by a direct walk across
// the span of their moves, then by dropping pairs of their moves, keeping
// only rewrites that still verify.
ReconfSequence tighten(const DsrInstance& inst, ReconfSequence seq) {
    seq = cancel_inverse_pairs(seq);
    std::vector<int> touches = touch_counts(seq, inst.graph.n());
    for (Vertex v = 0; v < inst.graph.n(); ++v) {
        if (touches[static_cast<std::size_t>(v)] <= 2) continue;
        std::vector<std::size_t> pos = positions(seq, v);
        const std::size_t len = seq.moves.size();
        const std::pair<std::size_t, std::size_t> spans[] = {
            {pos.front(), pos.back() + 1}, {0, pos.back() + 1}, {pos.front(), len}, {0, len}};
        for (auto [lo, hi] : spans) {
            auto walk = direct_path(inst.graph, inst.k, set_at(seq, lo), set_at(seq, hi));
            if (!walk) continue;
            ReconfSequence trial{seq.start, {seq.moves.begin(), seq.moves.begin() + static_cast<std::ptrdiff_t>(lo)}};
            trial.moves.insert(trial.moves.end(), walk->begin(), walk->end());
            trial.moves.insert(trial.moves.end(), seq.moves.begin() + static_cast<std::ptrdiff_t>(hi), seq.moves.end());
            if (verify(inst, trial).ok()) {
                seq = cancel_inverse_pairs(trial);
                break;
            }
        }
        for (bool changed = true; changed;) {
            changed = false;
            pos = positions(seq, v);
            for (std::size_t j = 0; j + 1 < pos.size() && pos.size() > 2 && !changed; ++j) {
                ReconfSequence trial{seq.start, {}};
                for (std::size_t i = 0; i < seq.moves.size(); ++i)
                    if (i != pos[j] && i != pos[j + 1]) trial.moves.push_back(seq.moves[i]);
                if (verify(inst, trial).ok()) {
                    seq = cancel_inverse_pairs(trial);
                    changed = true;
                }
            }
        }
        touches = touch_counts(seq, inst.graph.n());
    }
    return seq;
}

}  // namespace

SolveResult solve(const DsrInstance& inst, ClassEvidence ev) {
    check_evidence(inst.graph, ev);
    SolveResult out{decide(inst, ev), std::nullopt};
    if (out.decision.answer == Answer::No) return out;
    if (out.decision.reason == Reason::EqualEndpoints) {
        out.sequence = ReconfSequence{inst.source, {}};
        return out;
    }
    const ClassSolver solver = build_class_solver(inst.graph, std::move(ev));
    const ReconfSequence from_source = towards_canonical(inst, solver, inst.source, inst.target, std::nullopt);
    std::optional<Vertex> shed;
    if (inst.source.size() == inst.k) shed = from_source.moves.front().vertex;
    const ReconfSequence from_target = towards_canonical(inst, solver, inst.target, inst.source, shed);
    out.sequence = tighten(inst, concatenate(from_source, reverse(from_target)));
    return out;
}

}  // namespace dsr
