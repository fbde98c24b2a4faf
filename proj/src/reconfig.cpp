#include "dsr/reconfig.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "dsr/domset.hpp"

namespace dsr {

namespace {

Vertex extent(const ReconfSequence& seq) {
    Vertex n = seq.start.bound();
    for (const auto& mv : seq.moves) {
        if (mv.vertex < 0) throw Error("negative vertex id in move");
        n = std::max(n, mv.vertex + 1);
    }
    return n;
}

// Replays seq over a membership vector, calling visit(i, members, size) for each D_i.
template <class Visit>
void replay(const ReconfSequence& seq, Visit&& visit) {
    std::vector<char> in(static_cast<std::size_t>(extent(seq)), 0);
    for (Vertex v : seq.start) in[static_cast<std::size_t>(v)] = 1;
    std::size_t size = seq.start.size();
    visit(std::size_t{0}, in, size);
    for (std::size_t i = 0; i < seq.moves.size(); ++i) {
        const auto& mv = seq.moves[i];
        char& slot = in[static_cast<std::size_t>(mv.vertex)];
        if (mv.kind == MoveKind::Add) {
            if (slot) throw InvalidMove(i, "adds vertex " + std::to_string(mv.vertex + 1) + " already present");
            slot = 1;
            ++size;
        } else {
            if (!slot) throw InvalidMove(i, "removes vertex " + std::to_string(mv.vertex + 1) + " not present");
            slot = 0;
            --size;
        }
        visit(i + 1, in, size);
    }
}

VertexSet to_set(const std::vector<char>& in) {
    std::vector<Vertex> ids;
    for (std::size_t v = 0; v < in.size(); ++v)
        if (in[v]) ids.push_back(static_cast<Vertex>(v));
    return VertexSet(std::move(ids));
}

}  // namespace

std::vector<VertexSet> apply(const ReconfSequence& seq) {
    std::vector<VertexSet> out;
    out.reserve(seq.moves.size() + 1);
    replay(seq, [&](std::size_t, const std::vector<char>& in, std::size_t) { out.push_back(to_set(in)); });
    return out;
}

VertexSet final_set(const ReconfSequence& seq) {
    VertexSet last;
    replay(seq, [&](std::size_t i, const std::vector<char>& in, std::size_t) {
        if (i == seq.moves.size()) last = to_set(in);
    });
    return last;
}

ReconfSequence reverse(const ReconfSequence& seq) {
    ReconfSequence out{final_set(seq), {}};
    out.moves.reserve(seq.moves.size());
    for (auto it = seq.moves.rbegin(); it != seq.moves.rend(); ++it)
        out.moves.push_back({it->kind == MoveKind::Add ? MoveKind::Remove : MoveKind::Add, it->vertex});
    return out;
}

ReconfSequence concatenate(const ReconfSequence& seq, const ReconfSequence& tail) {
    if (final_set(seq) != tail.start) throw Error("concatenate: sequences do not meet");
    ReconfSequence out = seq;
    out.moves.insert(out.moves.end(), tail.moves.begin(), tail.moves.end());
    return out;
}

std::vector<int> touch_counts(const ReconfSequence& seq, Vertex n) {
    std::vector<int> out(static_cast<std::size_t>(n), 0);
    for (const auto& mv : seq.moves) {
        if (mv.vertex < 0 || mv.vertex >= n) throw Error("move vertex out of range");
        ++out[static_cast<std::size_t>(mv.vertex)];
    }
    return out;
}

std::size_t max_cardinality(const ReconfSequence& seq) {
    std::size_t best = 0;
    replay(seq, [&](std::size_t, const std::vector<char>&, std::size_t size) { best = std::max(best, size); });
    return best;
}

void validate_instance(const DsrInstance& inst) {
    check_members(inst.graph, inst.source);
    check_members(inst.graph, inst.target);
    if (!is_dominating(inst.graph, inst.source)) throw Error("source set is not a dominating set");
    if (!is_dominating(inst.graph, inst.target)) throw Error("target set is not a dominating set");
    if (inst.k < 1) throw Error("threshold k must be positive");
    if (inst.k < std::max(inst.source.size(), inst.target.size()))
        throw Error("threshold k is below max(|Ds|, |Dt|)");
}

const char* to_string(Violation v) {
    switch (v) {
        case Violation::None: return "NONE";
        case Violation::StartMismatch: return "START_MISMATCH";
        case Violation::FinalMismatch: return "FINAL_MISMATCH";
        case Violation::BadMove: return "BAD_MOVE";
        case Violation::NotDominating: return "NOT_DOMINATING";
        case Violation::OverThreshold: return "OVER_THRESHOLD";
    }
    return "UNKNOWN";
}

VerifyReport verify(const DsrInstance& inst, const ReconfSequence& seq) {
    const Graph& g = inst.graph;
    if (seq.start != inst.source) return {Violation::StartMismatch, 0, "D_0 differs from the source set"};
    for (Vertex v : seq.start)
        if (!g.contains(v)) return {Violation::BadMove, 0, "vertex " + std::to_string(v + 1) + " outside the graph"};
    for (const auto& mv : seq.moves)
        if (!g.contains(mv.vertex))
            return {Violation::BadMove, 0, "move on vertex " + std::to_string(mv.vertex + 1) + " outside the graph"};

    const auto n = static_cast<std::size_t>(g.n());
    std::vector<char> in(n, 0);
    std::vector<std::uint32_t> hits(n, 0);
    std::size_t undominated = n, size = 0;
    auto touch = [&](Vertex v, int delta) {
        auto bump = [&](Vertex u) {
            auto& h = hits[static_cast<std::size_t>(u)];
            if (delta > 0) {
                if (h++ == 0) --undominated;
            } else if (--h == 0) {
                ++undominated;
            }
        };
        bump(v);
        for (Vertex w : g.neighbors(v)) bump(w);
    };
    auto check = [&](std::size_t i) -> VerifyReport {
        if (size > inst.k)
            return {Violation::OverThreshold, i, "|D_" + std::to_string(i) + "| = " + std::to_string(size) + " exceeds k"};
        if (undominated > 0) {
            std::size_t u = 0;
            while (hits[u]) ++u;
            return {Violation::NotDominating, i, "D_" + std::to_string(i) + " misses vertex " + std::to_string(u + 1)};
        }
        return {};
    };
    for (Vertex v : seq.start) {
        in[static_cast<std::size_t>(v)] = 1;
        ++size;
        touch(v, 1);
    }
    VerifyReport report = check(0);
    for (std::size_t i = 0; i < seq.moves.size() && report.ok(); ++i) {
        const auto& mv = seq.moves[i];
        char& slot = in[static_cast<std::size_t>(mv.vertex)];
        if (mv.kind == MoveKind::Add) {
            if (slot) return {Violation::BadMove, i, "adds vertex " + std::to_string(mv.vertex + 1) + " already present"};
            slot = 1;
            ++size;
            touch(mv.vertex, 1);
        } else {
            if (!slot) return {Violation::BadMove, i, "removes vertex " + std::to_string(mv.vertex + 1) + " not present"};
            slot = 0;
            --size;
            touch(mv.vertex, -1);
        }
        report = check(i + 1);
    }
    if (!report.ok()) return report;
    std::vector<Vertex> last;
    for (std::size_t v = 0; v < n; ++v)
        if (in[v]) last.push_back(static_cast<Vertex>(v));
    if (VertexSet(std::move(last)) != inst.target)
        return {Violation::FinalMismatch, seq.moves.size(), "final set differs from the target set"};
    return report;
}

OracleResult reachability_bfs(Vertex n, const VertexSet& source, const VertexSet& target, std::size_t k,
                              const std::function<bool(std::uint32_t)>& feasible, std::size_t budget) {
    if (n > kOracleVertexLimit) throw Error("exhaustive search limited to n <= " + std::to_string(kOracleVertexLimit));
    const auto start = static_cast<std::uint32_t>(source.mask());
    const auto goal = static_cast<std::uint32_t>(target.mask());
    OracleResult result;
    if (start == goal) {
        result.reachable = true;
        result.sequence = ReconfSequence{source, {}};
        return result;
    }
    std::unordered_map<std::uint32_t, std::uint32_t> parent;
    parent.emplace(start, start);
    std::vector<std::uint32_t> queue{start};
    bool found = false;
    for (std::size_t head = 0; head < queue.size() && !found; ++head) {
        const std::uint32_t cur = queue[head];
        ++result.states_expanded;
        const auto size = static_cast<std::size_t>(std::popcount(cur));
        auto visit = [&](std::uint32_t next) {
            if (parent.contains(next) || !feasible(next)) return;
            parent.emplace(next, cur);
            if (parent.size() > budget) throw BudgetExceeded("state budget of " + std::to_string(budget) + " exceeded");
            if (next == goal) found = true;
            queue.push_back(next);
        };
        if (size < k)
            for (Vertex v = 0; v < n && !found; ++v)
                if (!(cur >> v & 1u)) visit(cur | (1u << v));
        for (Vertex v = 0; v < n && !found; ++v)
            if (cur >> v & 1u) visit(cur & ~(1u << v));
    }
    if (!found) return result;

    std::vector<Move> moves;
    for (std::uint32_t s = goal; s != start;) {
        const std::uint32_t p = parent.at(s);
        const std::uint32_t diff = s ^ p;
        const auto v = static_cast<Vertex>(std::countr_zero(diff));
        moves.push_back(s & diff ? Move::add(v) : Move::remove(v));
        s = p;
    }
    std::reverse(moves.begin(), moves.end());
    result.reachable = true;
    result.sequence = ReconfSequence{source, std::move(moves)};
    return result;
}

OracleResult oracle_reachable(const DsrInstance& inst, std::size_t budget) {
    validate_instance(inst);
    const Graph& g = inst.graph;
    if (g.n() > kOracleVertexLimit)
        throw Error("exhaustive search limited to n <= " + std::to_string(kOracleVertexLimit));
    const auto closed = closed_neighborhood_masks(g);
    const std::uint32_t full = g.n() == 32 ? ~0u : (1u << g.n()) - 1u;
    auto dominating = [&](std::uint32_t mask) {
        std::uint32_t covered = 0;
        for (std::uint32_t m = mask; m; m &= m - 1) covered |= static_cast<std::uint32_t>(closed[static_cast<std::size_t>(std::countr_zero(m))]);
        return covered == full;
    };
    return reachability_bfs(g.n(), inst.source, inst.target, inst.k, dominating, budget);
}

}  // namespace dsr
