#include "dsr/io.hpp"

#include <charconv>
#include <map>
#include <sstream>
#include <vector>

namespace dsr {

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

template <class F>
void for_each_line(std::string_view text, F&& f) {
    std::size_t line_no = 0, pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        ++line_no;
        auto tokens = tokenize(text.substr(pos, end - pos));
        if (!tokens.empty() && tokens[0] != "c") f(line_no, tokens);
        if (end == text.size()) break;
        pos = end + 1;
    }
}

long long parse_int(std::string_view tok, std::size_t line, const char* what) {
    long long v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
        throw ParseError(line, std::string("expected integer ") + what + ", got '" + std::string(tok) + "'");
    return v;
}

Vertex parse_vertex(std::string_view tok, std::size_t line, std::optional<Vertex> n) {
    long long v = parse_int(tok, line, "vertex id");
    if (v < 1 || (n && v > *n) || v > (1LL << 30))
        throw ParseError(line, "vertex id " + std::string(tok) + " out of range");
    return static_cast<Vertex>(v - 1);
}

VertexSet parse_members(const std::vector<std::string_view>& tokens, std::size_t line, std::optional<Vertex> n) {
    std::vector<Vertex> ids;
    for (std::size_t i = 1; i < tokens.size(); ++i) ids.push_back(parse_vertex(tokens[i], line, n));
    VertexSet s(ids);
    if (s.size() != ids.size()) throw ParseError(line, "duplicate vertex in set");
    return s;
}

void check_range(const VertexSet& s, Vertex n, std::size_t line) {
    if (!s.empty() && s.ids().back() >= n) throw ParseError(line, "vertex id " + std::to_string(s.ids().back() + 1) + " out of range");
}

}  // namespace

InstanceFile parse_instance_file(std::string_view text) {
    InstanceFile out;
    std::optional<Vertex> n;
    std::vector<Edge> edges;
    std::map<Vertex, Interval> intervals;
    std::size_t s_line = 0, t_line = 0, a_line = 0;
    for_each_line(text, [&](std::size_t line, const std::vector<std::string_view>& tok) {
        const std::string_view tag = tok[0];
        if (tag == "p") {
            if (n) throw ParseError(line, "duplicate header");
            if (tok.size() != 4 || tok[1] != "ds") throw ParseError(line, "malformed header, expected 'p ds <n> <m>'");
            long long nv = parse_int(tok[2], line, "vertex count");
            long long mv = parse_int(tok[3], line, "edge count");
            if (nv < 0 || mv < 0 || nv > (1LL << 30)) throw ParseError(line, "malformed header counts");
            n = static_cast<Vertex>(nv);
        } else if (tag == "e") {
            if (tok.size() != 3) throw ParseError(line, "malformed edge line");
            Vertex u = parse_vertex(tok[1], line, n), v = parse_vertex(tok[2], line, n);
            if (u == v) throw ParseError(line, "self-loop on vertex " + std::string(tok[1]));
            if (!n) throw ParseError(line, "edge before header");
            edges.emplace_back(u, v);
        } else if (tag == "s" || tag == "t" || tag == "a") {
            if (!n) throw ParseError(line, "set before header");
            auto& slot = tag == "s" ? out.source : tag == "t" ? out.target : out.clique;
            if (slot) throw ParseError(line, "duplicate '" + std::string(tag) + "' line");
            slot = parse_members(tok, line, n);
            (tag == "s" ? s_line : tag == "t" ? t_line : a_line) = line;
        } else if (tag == "k") {
            if (tok.size() != 2) throw ParseError(line, "malformed k line");
            long long k = parse_int(tok[1], line, "threshold");
            if (k < 1) throw ParseError(line, "threshold must be positive");
            out.k = static_cast<std::size_t>(k);
        } else if (tag == "rep") {
            if (tok.size() != 1) throw ParseError(line, "malformed rep marker");
        } else if (tag == "i") {
            if (tok.size() != 4) throw ParseError(line, "malformed interval line, expected 'i <v> <l> <r>'");
            Vertex v = parse_vertex(tok[1], line, n);
            try {
                Interval iv{parse_rational(std::string(tok[2])), parse_rational(std::string(tok[3]))};
                if (iv.left > iv.right) throw ParseError(line, "interval left endpoint exceeds right endpoint");
                if (!intervals.emplace(v, iv).second) throw ParseError(line, "duplicate interval for vertex");
            } catch (const ParseError&) {
                throw;
            } catch (const Error& e) {
                throw ParseError(line, e.what());
            }
        } else if (tag == "ct") {
            std::string rest;
            for (std::size_t i = 1; i < tok.size(); ++i) {
                if (i > 1) rest += ' ';
                rest += tok[i];
            }
            try {
                out.cotree = parse_cotree(rest);
            } catch (const Error& e) {
                throw ParseError(line, e.what());
            }
        } else {
            throw ParseError(line, "unknown line type '" + std::string(tag) + "'");
        }
    });
    if (!n) throw ParseError(0, "missing 'p ds <n> <m>' header");
    out.graph = Graph(*n, edges);
    if (out.source) check_range(*out.source, *n, s_line);
    if (out.target) check_range(*out.target, *n, t_line);
    if (out.clique) check_range(*out.clique, *n, a_line);
    if (!intervals.empty()) {
        IntervalRepresentation rep;
        for (Vertex v = 0; v < *n; ++v) {
            auto it = intervals.find(v);
            if (it == intervals.end()) throw ParseError(0, "interval representation misses vertex " + std::to_string(v + 1));
            rep.intervals.push_back(it->second);
        }
        out.rep = std::move(rep);
    }
    if (out.cotree && !is_canonical_cotree(*out.cotree, *n)) throw ParseError(0, "cotree is not a canonical cotree on the vertices");
    return out;
}

Graph parse_graph(std::string_view text) { return parse_instance_file(text).graph; }

namespace {

template <class Instance>
Instance require_endpoints(InstanceFile f) {
    if (!f.source) throw ParseError(0, "missing source line 's ...'");
    if (!f.target) throw ParseError(0, "missing target line 't ...'");
    if (!f.k) throw ParseError(0, "missing threshold line 'k <int>'");
    return Instance{std::move(f.graph), std::move(*f.source), std::move(*f.target), *f.k};
}

}  // namespace

DsrInstance parse_dsr_instance(std::string_view text) { return require_endpoints<DsrInstance>(parse_instance_file(text)); }

VcrInstance parse_vcr_instance(std::string_view text) { return require_endpoints<VcrInstance>(parse_instance_file(text)); }

IntervalRepresentation parse_interval_file(std::string_view text) {
    std::map<Vertex, Interval> intervals;
    for_each_line(text, [&](std::size_t line, const std::vector<std::string_view>& tok) {
        if (tok[0] == "rep") return;
        if (tok[0] != "i" || tok.size() != 4) throw ParseError(line, "expected 'i <v> <l> <r>'");
        Vertex v = parse_vertex(tok[1], line, std::nullopt);
        Interval iv;
        try {
            iv = {parse_rational(std::string(tok[2])), parse_rational(std::string(tok[3]))};
        } catch (const Error& e) {
            throw ParseError(line, e.what());
        }
        if (iv.left > iv.right) throw ParseError(line, "interval left endpoint exceeds right endpoint");
        if (!intervals.emplace(v, iv).second) throw ParseError(line, "duplicate interval for vertex");
    });
    IntervalRepresentation rep;
    if (intervals.empty()) return rep;
    const Vertex n = intervals.rbegin()->first + 1;
    for (Vertex v = 0; v < n; ++v) {
        auto it = intervals.find(v);
        if (it == intervals.end()) throw ParseError(0, "interval representation misses vertex " + std::to_string(v + 1));
        rep.intervals.push_back(it->second);
    }
    return rep;
}

ReconfSequence parse_sequence(std::string_view text) {
    std::optional<ReconfSequence> seq;
    for_each_line(text, [&](std::size_t line, const std::vector<std::string_view>& tok) {
        if (tok[0] == "s") {
            if (seq) throw ParseError(line, "duplicate start line");
            seq = ReconfSequence{parse_members(tok, line, std::nullopt), {}};
            return;
        }
        if (!seq) throw ParseError(line, "sequence must begin with 's <members>'");
        if ((tok[0] != "+" && tok[0] != "-") || tok.size() != 2) throw ParseError(line, "expected '+ <v>' or '- <v>'");
        Vertex v = parse_vertex(tok[1], line, std::nullopt);
        seq->moves.push_back(tok[0] == "+" ? Move::add(v) : Move::remove(v));
    });
    if (!seq) throw ParseError(0, "empty sequence file");
    return std::move(*seq);
}

ReductionMap parse_reduction_map(std::string_view text) {
    ReductionMap map;
    bool have_header = false;
    for_each_line(text, [&](std::size_t line, const std::vector<std::string_view>& tok) {
        if (tok[0] == "o") {
            if (tok.size() != 2) throw ParseError(line, "expected 'o <original vertex count>'");
            map.original_n = static_cast<Vertex>(parse_int(tok[1], line, "vertex count"));
            have_header = true;
            return;
        }
        if (tok[0] != "g" || tok.size() < 3) throw ParseError(line, "expected gadget line 'g <id> <role> ...'");
        Gadget gd{parse_vertex(tok[1], line, std::nullopt), GadgetRole::EdgeVertex};
        if (tok[2] == "edge") {
            if (tok.size() != 5) throw ParseError(line, "expected 'g <id> edge <u> <w>'");
            gd.u = parse_vertex(tok[3], line, std::nullopt);
            gd.w = parse_vertex(tok[4], line, std::nullopt);
        } else if (tok[2] == "x" || tok[2] == "y") {
            gd.role = tok[2] == "x" ? GadgetRole::X : GadgetRole::Y;
        } else {
            throw ParseError(line, "unknown gadget role '" + std::string(tok[2]) + "'");
        }
        if (!map.gadgets.empty() && map.gadgets.back().id >= gd.id) throw ParseError(line, "gadget ids must increase");
        map.gadgets.push_back(gd);
    });
    if (!have_header) throw ParseError(0, "missing 'o <n>' line");
    return map;
}

std::string format_set_line(char tag, const VertexSet& s) {
    std::string out(1, tag);
    for (Vertex v : s) out += ' ' + std::to_string(v + 1);
    return out;
}

std::string format_graph(const Graph& g) {
    std::ostringstream os;
    os << "p ds " << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) os << "e " << u + 1 << ' ' << v + 1 << '\n';
    return os.str();
}

std::string format_interval_rep(const IntervalRepresentation& rep) {
    std::ostringstream os;
    for (Vertex v = 0; v < rep.size(); ++v)
        os << "i " << v + 1 << ' ' << format_rational(rep[v].left) << ' ' << format_rational(rep[v].right) << '\n';
    return os.str();
}

std::string format_instance(const Graph& g, const VertexSet& source, const VertexSet& target, std::size_t k,
                            InstanceExtras extras) {
    std::string out = format_graph(g);
    out += format_set_line('s', source) + '\n';
    out += format_set_line('t', target) + '\n';
    out += "k " + std::to_string(k) + '\n';
    if (extras.clique) out += format_set_line('a', *extras.clique) + '\n';
    if (extras.cotree) out += "ct " + format_cotree(*extras.cotree) + '\n';
    if (extras.rep) out += "rep\n" + format_interval_rep(*extras.rep);
    return out;
}

std::string format_sequence(const ReconfSequence& seq) {
    std::string out = format_set_line('s', seq.start) + '\n';
    for (const auto& mv : seq.moves) out += (mv.kind == MoveKind::Add ? "+ " : "- ") + std::to_string(mv.vertex + 1) + '\n';
    return out;
}

std::string format_reduction_map(const ReductionMap& map) {
    std::ostringstream os;
    os << "o " << map.original_n << '\n';
    for (const auto& gd : map.gadgets) {
        os << "g " << gd.id + 1 << ' ';
        switch (gd.role) {
            case GadgetRole::EdgeVertex: os << "edge " << gd.u + 1 << ' ' << gd.w + 1; break;
            case GadgetRole::X: os << 'x'; break;
            case GadgetRole::Y: os << 'y'; break;
        }
        os << '\n';
    }
    return os.str();
}

std::string read_all(std::istream& in) {
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace dsr
