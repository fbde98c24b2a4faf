#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dsr/graph.hpp"
#include "dsr/reconfig.hpp"

namespace dsr {

/// Vertex cover reconfiguration instance (G', C_s, C_t, k).
struct VcrInstance {
    Graph graph;
    VertexSet source;
    VertexSet target;
    std::size_t k = 0;
};

bool is_vertex_cover(const Graph& g, const VertexSet& c);

/// Throws unless both endpoints are covers of size <= k.
void validate_vcr_instance(const VcrInstance& inst);

/// Exhaustive search over vertex covers of size <= k; n <= 20.
OracleResult vcr_oracle(const VcrInstance& inst, std::size_t budget = kDefaultStateBudget);

enum class GadgetRole { EdgeVertex, X, Y };

struct Gadget {
    Vertex id;
    GadgetRole role;
    Vertex u = -1;  // endpoints of the subdivided edge, EdgeVertex only
    Vertex w = -1;
    friend bool operator==(const Gadget&, const Gadget&) = default;
};

/// Vertices 0..original_n-1 keep their ids; gadgets are numbered above them.
struct ReductionMap {
    Vertex original_n = 0;
    std::vector<Gadget> gadgets;

    const Gadget* find(Vertex v) const;
    friend bool operator==(const ReductionMap&, const ReductionMap&) = default;
};

/// Adds a vertex v_uw adjacent to u and w for every edge uw. The result has
/// n' + m' vertices and exactly 3m' edges; endpoints and k carry over.
std::pair<DsrInstance, ReductionMap> reduce_vcr_to_dsr(const VcrInstance& inst);

/// A = V(G') becomes a clique, B holds one vertex per edge joined to the
/// edge's endpoints.
std::pair<DsrInstance, ReductionMap> reduce_vcr_to_split_dsr(const VcrInstance& inst);

/// Clique side A, independent side B of a split graph.
struct SplitPartition {
    VertexSet clique;
    VertexSet independent;
};

/// Degree-sequence split recognition; empty optional when g is not split.
std::optional<SplitPartition> find_split_partition(const Graph& g);

/// Empties the clique A, then adds an edge xy with y joined to all of A.
/// Endpoints gain y and k grows by one. Requires D_s, D_t inside A.
std::pair<DsrInstance, ReductionMap> reduce_split_to_bipartite_dsr(const DsrInstance& inst,
                                                                   const SplitPartition& split);

/// Rewrites a DSR sequence on a reduced graph so that every edge gadget is
/// replaced by one of its endpoints (the smaller id, unless the other one is
/// already present); moves that become no-ops are dropped, as are adjacent
/// add/remove pairs on one vertex.
ReconfSequence normalize_sequence(const ReconfSequence& seq, const ReductionMap& map, const Graph& g);

}  // namespace dsr
