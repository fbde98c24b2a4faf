#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dsr/graph.hpp"

namespace dsr {

enum class MoveKind : std::uint8_t { Add, Remove };

struct Move {
    MoveKind kind;
    Vertex vertex;

    static Move add(Vertex v) { return {MoveKind::Add, v}; }
    static Move remove(Vertex v) { return {MoveKind::Remove, v}; }
    friend bool operator==(const Move&, const Move&) = default;
};

/// A start set plus single-vertex additions and removals.
struct ReconfSequence {
    VertexSet start;
    std::vector<Move> moves;

    std::size_t length() const { return moves.size(); }
    friend bool operator==(const ReconfSequence&, const ReconfSequence&) = default;
};

/// Thrown when a move adds a present vertex or removes an absent one.
class InvalidMove : public Error {
public:
    InvalidMove(std::size_t index, const std::string& what)
        : Error("move " + std::to_string(index + 1) + ": " + what), index_(index) {}
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

/// The sets D_0 .. D_l.
std::vector<VertexSet> apply(const ReconfSequence& seq);
/// D_l without materialising the intermediates.
VertexSet final_set(const ReconfSequence& seq);
ReconfSequence reverse(const ReconfSequence& seq);
/// seq followed by tail; tail.start must equal final_set(seq).
ReconfSequence concatenate(const ReconfSequence& seq, const ReconfSequence& tail);
/// Number of moves touching each vertex, indexed 0..n-1.
std::vector<int> touch_counts(const ReconfSequence& seq, Vertex n);
/// Largest |D_i| along the sequence.
std::size_t max_cardinality(const ReconfSequence& seq);

/// (G, D_s, D_t, k).
struct DsrInstance {
    Graph graph;
    VertexSet source;
    VertexSet target;
    std::size_t k = 0;
};

/// Throws unless both endpoints dominate, lie in range and fit under k >= 1.
void validate_instance(const DsrInstance& inst);

enum class Violation {
    None,
    StartMismatch,
    FinalMismatch,
    BadMove,
    NotDominating,
    OverThreshold,
};

const char* to_string(Violation v);

struct VerifyReport {
    Violation violation = Violation::None;
    /// Index of the offending set D_i (or move index for BadMove).
    std::size_t index = 0;
    std::string message;

    bool ok() const { return violation == Violation::None; }
};

/// Checks D_0 = source, D_l = target and every D_i dominating with |D_i| <= k.
/// Domination is recomputed from scratch for every set.
VerifyReport verify(const DsrInstance& inst, const ReconfSequence& seq);

inline constexpr std::size_t kDefaultStateBudget = 5'000'000;
inline constexpr Vertex kOracleVertexLimit = 20;

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

struct OracleResult {
    bool reachable = false;
    std::optional<ReconfSequence> sequence;  // shortest, present when reachable
    std::size_t states_expanded = 0;
};

/// Breadth-first search over the subsets of {0..n-1} of size <= k accepted by
/// `feasible`, moving by one addition or removal. Neighbours are expanded
/// additions first, then removals, each in vertex order.
OracleResult reachability_bfs(Vertex n, const VertexSet& source, const VertexSet& target, std::size_t k,
                              const std::function<bool(std::uint32_t)>& feasible,
                              std::size_t budget = kDefaultStateBudget);

/// Exhaustive DSR decision with a shortest witness; n <= 20.
OracleResult oracle_reachable(const DsrInstance& inst, std::size_t budget = kDefaultStateBudget);

}  // namespace dsr
