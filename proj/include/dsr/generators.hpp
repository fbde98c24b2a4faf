#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <variant>

#include "dsr/cotree.hpp"
#include "dsr/interval.hpp"
#include "dsr/reconfig.hpp"
#include "dsr/reductions.hpp"
#include "dsr/scheme.hpp"

namespace dsr {

/// mt19937_64 seeded from (seed, stream name), so independent draws (graph
/// shape, endpoints, relabelling) stay reproducible on their own.
class StreamRng {
public:
    StreamRng(std::uint64_t seed, std::string_view stream);

    std::uint64_t next() { return engine_(); }
    /// Uniform in [lo, hi], unbiased.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    bool coin(double p_true = 0.5);
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(i) - 1))]);
    }

private:
    std::mt19937_64 engine_;
};

enum class GenClass { Tree, Interval, Cograph, General, Vcr };
enum class KPolicy { Tight, Slack, Explicit };

const char* to_string(GenClass c);
const char* to_string(KPolicy p);
GenClass parse_gen_class(std::string_view s);
KPolicy parse_k_policy(std::string_view s);

struct GenSpec {
    GenClass cls = GenClass::Tree;
    Vertex n = 8;
    std::uint64_t seed = 0;
    KPolicy k_policy = KPolicy::Slack;
    std::size_t explicit_k = 0;
    /// Edge probability (general), interval length scale (interval), edge
    /// count ratio m/n (vcr).
    double density = 0.3;
    /// Interval and cograph graphs are made connected unless cleared.
    bool connected = true;
    /// Probability that an endpoint gets non-minimal padding.
    double pad_probability = 0.5;
};

struct GeneratedDsr {
    DsrInstance instance;
    std::optional<ClassEvidence> evidence;  // absent for general graphs
};

struct GeneratedVcr {
    VcrInstance instance;
};

using Generated = std::variant<GeneratedDsr, GeneratedVcr>;

Generated generate(const GenSpec& spec);

// Building blocks, exposed for tests.
Graph random_tree(Vertex n, StreamRng& rng);
IntervalRepresentation random_intervals(Vertex n, bool connected, double length_scale, StreamRng& rng);
/// Random canonical cotree on leaves 0..n-1 (relabelled at random).
Cotree random_cotree(Vertex n, bool connected, StreamRng& rng);
Graph random_graph(Vertex n, double p, StreamRng& rng);
/// Random minimal dominating set, optionally padded with extra vertices.
VertexSet random_dominating_set(const Graph& g, double pad_probability, StreamRng& rng);
VertexSet random_vertex_cover(const Graph& g, double pad_probability, StreamRng& rng);

}  // namespace dsr
