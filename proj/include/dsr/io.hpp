#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>

#include "dsr/cotree.hpp"
#include "dsr/interval.hpp"
#include "dsr/reconfig.hpp"
#include "dsr/reductions.hpp"

namespace dsr {

// Line-oriented text formats. Vertex ids are 1-based on disk, comment lines
// start with `c`.
//
//   p ds <n> <m>        header
//   e <u> <v>           edge
//   s <v1> <v2> ...     source set (or start set of a sequence)
//   t <v1> <v2> ...     target set
//   k <int>             threshold
//   rep                 optional marker before interval lines
//   i <v> <l> <r>       interval of v, decimal or a/b endpoints
//   ct <cotree>         cotree, e.g. J(U(1 3) U(2 4))
//   a <v1> ...          clique side of a split graph
//   + <v> / - <v>       sequence moves

/// Everything an instance file may carry.
struct InstanceFile {
    Graph graph;
    std::optional<VertexSet> source;
    std::optional<VertexSet> target;
    std::optional<std::size_t> k;
    std::optional<IntervalRepresentation> rep;
    std::optional<Cotree> cotree;
    std::optional<VertexSet> clique;
};

InstanceFile parse_instance_file(std::string_view text);
Graph parse_graph(std::string_view text);
/// Source, target and k are required.
DsrInstance parse_dsr_instance(std::string_view text);
VcrInstance parse_vcr_instance(std::string_view text);
/// `i` lines only; every vertex 1..max must appear once.
IntervalRepresentation parse_interval_file(std::string_view text);
ReconfSequence parse_sequence(std::string_view text);
ReductionMap parse_reduction_map(std::string_view text);

std::string format_graph(const Graph& g);
std::string format_set_line(char tag, const VertexSet& s);
std::string format_interval_rep(const IntervalRepresentation& rep);

struct InstanceExtras {
    const IntervalRepresentation* rep = nullptr;
    const Cotree* cotree = nullptr;
    const VertexSet* clique = nullptr;
};

std::string format_instance(const Graph& g, const VertexSet& source, const VertexSet& target, std::size_t k,
                            InstanceExtras extras = {});
inline std::string format_instance(const DsrInstance& inst, InstanceExtras extras = {}) {
    return format_instance(inst.graph, inst.source, inst.target, inst.k, extras);
}
inline std::string format_instance(const VcrInstance& inst, InstanceExtras extras = {}) {
    return format_instance(inst.graph, inst.source, inst.target, inst.k, extras);
}
std::string format_sequence(const ReconfSequence& seq);
std::string format_reduction_map(const ReductionMap& map);

std::string read_all(std::istream& in);

}  // namespace dsr
