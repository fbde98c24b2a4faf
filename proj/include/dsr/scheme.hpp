#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dsr/cotree.hpp"
#include "dsr/interval.hpp"
#include "dsr/reconfig.hpp"

namespace dsr {

enum class GraphClass { Tree, Interval, Cograph };

const char* to_string(GraphClass c);

/// Certificate that every component of a graph belongs to a class with a
/// canonical dominating set. Trees need no extra data; cographs carry a cotree
/// (computed when absent) and interval graphs their representation.
struct ClassEvidence {
    GraphClass cls = GraphClass::Tree;
    std::optional<Cotree> cotree;
    std::optional<IntervalRepresentation> rep;

    static ClassEvidence tree() { return {GraphClass::Tree, {}, {}}; }
    static ClassEvidence cograph(std::optional<Cotree> ct = {}) { return {GraphClass::Cograph, std::move(ct), {}}; }
    static ClassEvidence interval(IntervalRepresentation rep) { return {GraphClass::Interval, {}, std::move(rep)}; }
};

class UnsupportedClass : public Error {
public:
    using Error::Error;
};

/// Throws UnsupportedClass when the evidence does not certify g. Fills in a
/// missing cotree.
void check_evidence(const Graph& g, ClassEvidence& ev);

enum class Answer { Yes, No };
enum class Reason { EqualEndpoints, SlackK, NonminimalEndpoints, MinimalEndpointAtK };

const char* to_string(Answer a);
const char* to_string(Reason r);

struct Decision {
    Answer answer;
    Reason reason;
    friend bool operator==(const Decision&, const Decision&) = default;
};

/// Canonical set plus a transformation D -> canonical that never exceeds |D| + 1.
struct ClassSolver {
    VertexSet canonical;
    std::function<ReconfSequence(const VertexSet&)> transform;
};

/// A connected component in local ids; vertices[i] is the global id of local i.
struct ComponentPart {
    std::vector<Vertex> vertices;
    ClassSolver solver;
};

/// Union of the component canonicals; the transform runs component by
/// component in the given order.
ClassSolver compose_components(std::vector<ComponentPart> parts, Vertex n);

/// Solver for a whole (possibly disconnected) graph of the evidenced class.
ClassSolver build_class_solver(const Graph& g, ClassEvidence ev);

/// Linear-time decision. Never builds a canonical set.
Decision decide(const DsrInstance& inst, ClassEvidence ev);

struct SolveResult {
    Decision decision;
    std::optional<ReconfSequence> sequence;
};

/// Decision plus, on YES, a sequence D_s -> C* -> D_t that verifies at k.
SolveResult solve(const DsrInstance& inst, ClassEvidence ev);

}  // namespace dsr
