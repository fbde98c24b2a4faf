#include "dsr/interval.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace dsr {

namespace {

long long parse_digits(const std::string& s, const std::string& whole) {
    if (s.empty() || s.size() > 17) throw Error("bad rational '" + whole + "'");
    long long v = 0;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) throw Error("bad rational '" + whole + "'");
        v = v * 10 + (c - '0');
    }
    return v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        negative = s[0] == '-';
        s.erase(0, 1);
    }
    Rational r;
    if (auto slash = s.find('/'); slash != std::string::npos) {
        long long num = parse_digits(s.substr(0, slash), text);
        long long den = parse_digits(s.substr(slash + 1), text);
        if (den == 0) throw Error("zero denominator in '" + text + "'");
        r = Rational(num, den);
    } else if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if (ip.empty()) ip = "0";
        if (fp.empty()) fp = "0";
        long long scale = 1;
        for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
        if (ip.size() + fp.size() > 17) throw Error("bad rational '" + text + "'");
        r = Rational(parse_digits(ip, text) * scale + parse_digits(fp, text), scale);
    } else {
        r = Rational(parse_digits(s, text));
    }
    return negative ? -r : r;
}

std::string format_rational(const Rational& r) {
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1) os << '/' << r.denominator();
    return os.str();
}

Graph interval_graph(const IntervalRepresentation& rep) {
    std::vector<Vertex> order(static_cast<std::size_t>(rep.size()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        return rep[a].left != rep[b].left ? rep[a].left < rep[b].left : a < b;
    });
    // sweep by left endpoint; each later interval starting before r(v) meets v
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size() && rep[order[j]].left <= rep[order[i]].right; ++j)
            edges.emplace_back(order[i], order[j]);
    return Graph(rep.size(), edges);
}

bool validate_interval_representation(const Graph& g, const IntervalRepresentation& rep) {
    if (rep.size() != g.n()) throw Error("interval representation does not cover every vertex");
    for (const auto& iv : rep.intervals)
        if (iv.left > iv.right) throw Error("interval with left endpoint above right endpoint");
    for (auto [u, v] : g.edges())
        if (!intersects(rep[u], rep[v])) return false;
    // disjoint pairs are exactly the (i, j) with r(i) < l(j)
    std::vector<Rational> lefts;
    lefts.reserve(rep.intervals.size());
    for (const auto& iv : rep.intervals) lefts.push_back(iv.left);
    std::sort(lefts.begin(), lefts.end());
    std::size_t disjoint = 0;
    for (const auto& iv : rep.intervals)
        disjoint += static_cast<std::size_t>(lefts.end() - std::upper_bound(lefts.begin(), lefts.end(), iv.right));
    const std::size_t n = rep.intervals.size();
    const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
    return pairs - disjoint == g.m();
}

bool has_distinct_right_endpoints(const IntervalRepresentation& rep) {
    std::vector<Rational> rs;
    for (const auto& iv : rep.intervals) rs.push_back(iv.right);
    std::sort(rs.begin(), rs.end());
    return std::adjacent_find(rs.begin(), rs.end()) == rs.end();
}

IntervalRepresentation canonicalize(const IntervalRepresentation& rep) {
    if (has_distinct_right_endpoints(rep)) return rep;
    std::vector<Rational> values;
    for (const auto& iv : rep.intervals) {
        values.push_back(iv.left);
        values.push_back(iv.right);
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    Rational gap(0);
    for (std::size_t i = 1; i < values.size(); ++i) {
        Rational d = values[i] - values[i - 1];
        if (gap == Rational(0) || d < gap) gap = d;
    }
    const Rational eps = gap == Rational(0) ? Rational(1) : gap / 2;

    std::vector<Vertex> order(static_cast<std::size_t>(rep.size()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        return rep[a].right != rep[b].right ? rep[a].right < rep[b].right : a < b;
    });
    IntervalRepresentation out = rep;
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j < order.size() && rep[order[j]].right == rep[order[i]].right) ++j;
        const long long group = static_cast<long long>(j - i);
        for (std::size_t t = i; t < j; ++t)
            out.intervals[static_cast<std::size_t>(order[t])].right += eps * Rational(static_cast<long long>(t - i), group);
        i = j;
    }
    return out;
}

IntervalRepresentation restrict_representation(const IntervalRepresentation& rep, std::span<const Vertex> vertices) {
    IntervalRepresentation out;
    out.intervals.reserve(vertices.size());
    for (Vertex v : vertices) out.intervals.push_back(rep[v]);
    return out;
}

}  // namespace dsr
