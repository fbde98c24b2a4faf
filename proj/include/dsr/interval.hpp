#pragma once

#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "dsr/graph.hpp"

namespace dsr {

using Rational = boost::rational<long long>;

/// Parses `3`, `-1.25` or `7/4`.
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& r);

struct Interval {
    Rational left;
    Rational right;
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// One closed interval per vertex, indexed by vertex id.
struct IntervalRepresentation {
    std::vector<Interval> intervals;

    Vertex size() const { return static_cast<Vertex>(intervals.size()); }
    const Interval& operator[](Vertex v) const { return intervals[static_cast<std::size_t>(v)]; }
    friend bool operator==(const IntervalRepresentation&, const IntervalRepresentation&) = default;
};

inline bool intersects(const Interval& a, const Interval& b) {
    return a.left <= b.right && b.left <= a.right;
}

/// Intersection graph of the representation.
Graph interval_graph(const IntervalRepresentation& rep);

/// True iff the intersection graph of rep equals g. Throws if rep does not cover
/// every vertex or has an interval with left > right. O(n log n + m).
bool validate_interval_representation(const Graph& g, const IntervalRepresentation& rep);

/// Returns a representation with pairwise-distinct right endpoints and the same
/// intersection graph. Tied right endpoints are spread upward by fractions of
/// half the smallest positive gap between endpoint values, in vertex-id order.
IntervalRepresentation canonicalize(const IntervalRepresentation& rep);

bool has_distinct_right_endpoints(const IntervalRepresentation& rep);

/// Restriction to `vertices`; local id i takes the interval of vertices[i].
IntervalRepresentation restrict_representation(const IntervalRepresentation& rep,
                                               std::span<const Vertex> vertices);

}  // namespace dsr
