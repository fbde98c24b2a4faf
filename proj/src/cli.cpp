#include "dsr/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "dsr/canonical_cograph.hpp"
#include "dsr/canonical_interval.hpp"
#include "dsr/canonical_tree.hpp"
#include "dsr/generators.hpp"
#include "dsr/io.hpp"
#include "dsr/scheme.hpp"

namespace dsr::cli {

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

struct Options {
    std::string input = "-";
    std::string sequence = "-";
    std::string output = "-";
    std::string map_path;
    std::string rep_path;
    std::string cls = "auto";
    std::string kind;
    std::string format = "text";
    bool emit_sequence = false;
    bool oracle_fallback = false;
    std::size_t budget = kDefaultStateBudget;
    std::uint64_t seed = 0;
    Vertex n = 8;
    std::string gen_class = "tree";
    std::string k_policy = "slack";
    std::optional<std::size_t> k;
    std::optional<double> density;
    bool disconnected = false;
};

class Io {
public:
    Io(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

    std::string read(const std::string& path) {
        if (path == "-") {
            if (stdin_used_) throw Error("standard input can only be read once");
            stdin_used_ = true;
            return read_all(in_);
        }
        std::ifstream f(path);
        if (!f) throw Error("cannot open '" + path + "'");
        return read_all(f);
    }

    void write(const std::string& path, const std::string& text) {
        if (path == "-") {
            out_ << text;
            return;
        }
        std::ofstream f(path);
        if (!f) throw Error("cannot write '" + path + "'");
        f << text;
    }

    std::ostream& out() { return out_; }

private:
    std::istream& in_;
    std::ostream& out_;
    bool stdin_used_ = false;
};

bool has_header(std::string_view text) {
    std::istringstream is{std::string(text)};
    std::string tok, line;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        if (ls >> tok && tok == "p") return true;
    }
    return false;
}

std::string members(const VertexSet& s) {
    std::string out;
    for (Vertex v : s) out += (out.empty() ? "" : " ") + std::to_string(v + 1);
    return out;
}

json sequence_json(const ReconfSequence& seq) {
    json start = json::array(), moves = json::array();
    for (Vertex v : seq.start) start.push_back(v + 1);
    for (const auto& mv : seq.moves) moves.push_back((mv.kind == MoveKind::Add ? "+" : "-") + std::to_string(mv.vertex + 1));
    return {{"start", start}, {"moves", moves}};
}

json envelope(const std::string& answer, const std::string& reason, std::size_t states, Clock::time_point t0) {
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return {{"schema", 1},
            {"answer", answer},
            {"reason", reason},
            {"stats", {{"states_expanded", states}, {"time_ms", ms}}}};
}

std::optional<IntervalRepresentation> load_rep(const Options& opt, Io& io, const InstanceFile& f) {
    if (!opt.rep_path.empty()) return parse_interval_file(io.read(opt.rep_path));
    return f.rep;
}

/// --class auto: tree (forest), then cograph, then interval if a representation is available.
ClassEvidence resolve_evidence(const std::string& cls, const InstanceFile& f, const std::optional<IntervalRepresentation>& rep) {
    if (cls == "tree") return ClassEvidence::tree();
    if (cls == "cograph") return ClassEvidence::cograph(f.cotree);
    if (cls == "interval") {
        if (!rep) throw UnsupportedClass("interval class needs a representation ('i' lines or --rep)");
        return ClassEvidence::interval(*rep);
    }
    if (is_forest(f.graph)) return ClassEvidence::tree();
    if (f.cotree) return ClassEvidence::cograph(f.cotree);
    if (auto d = cotree_decompose(f.graph); std::holds_alternative<Cotree>(d))
        return ClassEvidence::cograph(std::get<Cotree>(std::move(d)));
    if (rep) return ClassEvidence::interval(*rep);
    throw UnsupportedClass("graph is neither a forest nor a cograph and no interval representation was given");
}

struct Outcome {
    bool yes = false;
    std::string reason;
    std::optional<ReconfSequence> sequence;
    std::size_t states = 0;
};

Outcome run_oracle(const DsrInstance& inst, std::size_t budget) {
    OracleResult r = oracle_reachable(inst, budget);
    return {r.reachable, "ORACLE", std::move(r.sequence), r.states_expanded};
}

Outcome decide_or_solve(const Options& opt, Io& io, bool want_sequence) {
    InstanceFile f = parse_instance_file(io.read(opt.input));
    if (!f.source || !f.target || !f.k) throw Error("instance needs 's', 't' and 'k' lines");
    DsrInstance inst{f.graph, *f.source, *f.target, *f.k};
    validate_instance(inst);
    ClassEvidence ev;
    try {
        ev = resolve_evidence(opt.cls, f, load_rep(opt, io, f));
        check_evidence(inst.graph, ev);
    } catch (const UnsupportedClass&) {
        if (!opt.oracle_fallback) throw;
        return run_oracle(inst, opt.budget);
    }
    if (!want_sequence) {
        Decision d = decide(inst, std::move(ev));
        return {d.answer == Answer::Yes, to_string(d.reason), std::nullopt, 0};
    }
    SolveResult r = solve(inst, std::move(ev));
    return {r.decision.answer == Answer::Yes, to_string(r.decision.reason), std::move(r.sequence), 0};
}

int report(const Options& opt, Io& io, const Outcome& o, Clock::time_point t0) {
    const std::string answer = o.yes ? "YES" : "NO";
    const bool emit = opt.emit_sequence && o.sequence;
    if (opt.format == "json") {
        json j = envelope(answer, o.reason, o.states, t0);
        if (emit) j["sequence"] = sequence_json(*o.sequence);
        io.out() << j.dump() << '\n';
    } else if (emit && opt.output == "-") {
        io.out() << "c " << answer << ' ' << o.reason << '\n' << format_sequence(*o.sequence);
    } else {
        io.out() << answer << ' ' << o.reason << '\n';
        if (emit) io.write(opt.output, format_sequence(*o.sequence));
    }
    return o.yes ? kExitYes : kExitNo;
}

int cmd_verify(const Options& opt, Io& io, Clock::time_point t0) {
    DsrInstance inst = parse_dsr_instance(io.read(opt.input));
    validate_instance(inst);
    ReconfSequence seq = parse_sequence(io.read(opt.sequence));
    VerifyReport rep = verify(inst, seq);
    if (opt.format == "json") {
        json j = envelope(rep.ok() ? "VALID" : "INVALID", to_string(rep.violation), 0, t0);
        if (!rep.ok()) j["index"] = rep.index, j["message"] = rep.message;
        io.out() << j.dump() << '\n';
    } else if (rep.ok()) {
        io.out() << "VALID length " << seq.length() << '\n';
    } else {
        io.out() << "INVALID " << to_string(rep.violation) << " at " << rep.index << ": " << rep.message << '\n';
    }
    return rep.ok() ? kExitYes : kExitNo;
}

void print_cells(std::ostream& os, const CellPartition& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << "cell " << i + 1 << ' ' << members(cells.cells[i]) << '\n';
}

int cmd_label(const Options& opt, Io& io, Clock::time_point t0) {
    const std::string text = io.read(opt.input);
    InstanceFile f;
    if (has_header(text)) {
        f = parse_instance_file(text);
    } else {
        f.rep = parse_interval_file(text);
        f.graph = interval_graph(*f.rep);
    }
    ClassEvidence ev = resolve_evidence(opt.cls, f, load_rep(opt, io, f));
    const Graph& g = f.graph;
    std::ostringstream os;
    json j = envelope("OK", to_string(ev.cls), 0, t0);
    auto dump_labels = [&](const std::vector<int>& label, const CellPartition& cells) {
        for (Vertex v = 0; v < g.n(); ++v) os << "v " << v + 1 << ' ' << label[static_cast<std::size_t>(v)] << '\n';
        print_cells(os, cells);
        j["labels"] = label;
        json cj = json::array();
        for (const auto& c : cells.cells) {
            json m = json::array();
            for (Vertex v : c) m.push_back(v + 1);
            cj.push_back(m);
        }
        j["cells"] = cj;
    };
    switch (ev.cls) {
        case GraphClass::Tree: {
            if (!is_tree(g)) throw UnsupportedClass("label --class tree needs a tree");
            TreeLabeling lab = label_tree(g);
            dump_labels(lab.label, tree_cells(lab));
            break;
        }
        case GraphClass::Interval: {
            check_evidence(g, ev);
            if (!is_connected(g)) throw UnsupportedClass("label --class interval needs a connected graph");
            IntervalLabeling lab = label_interval(g, *ev.rep);
            dump_labels(lab.label, interval_cells(lab, canonicalize(*ev.rep)));
            break;
        }
        case GraphClass::Cograph: {
            check_evidence(g, ev);
            if (!is_connected(g)) throw UnsupportedClass("label --class cograph needs a connected graph");
            CographCanonical can = cograph_canonical(g, *ev.cotree);
            os << "canonical " << members(can.canonical) << '\n';
            if (can.b < 0) {
                os << "universal " << can.a + 1 << '\n';
            } else {
                os << "side_a " << members(can.side_a) << '\n' << "side_b " << members(can.side_b) << '\n';
            }
            auto ids = [](const VertexSet& s) {
                json m = json::array();
                for (Vertex v : s) m.push_back(v + 1);
                return m;
            };
            j["canonical"] = ids(can.canonical);
            j["side_a"] = ids(can.side_a);
            j["side_b"] = ids(can.side_b);
            break;
        }
    }
    if (opt.format == "json") {
        j["stats"]["time_ms"] = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        io.out() << j.dump() << '\n';
    } else {
        io.out() << os.str();
    }
    return kExitYes;
}

int cmd_reduce(const Options& opt, Io& io) {
    const std::string text = io.read(opt.input);
    std::string reduced;
    ReductionMap map;
    if (opt.kind == "vcr-dsr" || opt.kind == "vcr-split") {
        VcrInstance inst = parse_vcr_instance(text);
        auto [out, m] = opt.kind == "vcr-dsr" ? reduce_vcr_to_dsr(inst) : reduce_vcr_to_split_dsr(inst);
        std::vector<Vertex> a(static_cast<std::size_t>(inst.graph.n()));
        for (Vertex v = 0; v < inst.graph.n(); ++v) a[static_cast<std::size_t>(v)] = v;
        VertexSet clique(a);
        InstanceExtras extras;
        if (opt.kind == "vcr-split") extras.clique = &clique;
        reduced = format_instance(out, extras);
        map = std::move(m);
    } else if (opt.kind == "split-bipartite") {
        InstanceFile f = parse_instance_file(text);
        if (!f.source || !f.target || !f.k) throw Error("instance needs 's', 't' and 'k' lines");
        DsrInstance inst{f.graph, *f.source, *f.target, *f.k};
        std::optional<SplitPartition> split;
        if (f.clique) {
            std::vector<Vertex> rest;
            for (Vertex v = 0; v < f.graph.n(); ++v)
                if (!f.clique->contains(v)) rest.push_back(v);
            split = SplitPartition{*f.clique, VertexSet(rest)};
        } else {
            split = find_split_partition(f.graph);
            if (!split) throw Error("graph is not a split graph");
        }
        auto [out, m] = reduce_split_to_bipartite_dsr(inst, *split);
        reduced = format_instance(out);
        map = std::move(m);
    } else {
        throw Error("unknown reduction kind '" + opt.kind + "'");
    }
    io.write(opt.output, reduced);
    std::string map_path = opt.map_path;
    if (map_path.empty() && opt.output != "-") map_path = opt.output + ".map";
    if (!map_path.empty()) io.write(map_path, format_reduction_map(map));
    return kExitYes;
}

int cmd_generate(const Options& opt, Io& io) {
    GenSpec spec;
    spec.cls = parse_gen_class(opt.gen_class);
    spec.n = opt.n;
    spec.seed = opt.seed;
    spec.k_policy = parse_k_policy(opt.k_policy);
    if (opt.k) {
        spec.k_policy = KPolicy::Explicit;
        spec.explicit_k = *opt.k;
    } else if (spec.k_policy == KPolicy::Explicit) {
        throw Error("--k-policy explicit needs --k");
    }
    if (opt.density) spec.density = *opt.density;
    spec.connected = !opt.disconnected;
    Generated gen = generate(spec);
    std::string text;
    if (auto* d = std::get_if<GeneratedDsr>(&gen)) {
        InstanceExtras extras;
        if (d->evidence) {
            if (d->evidence->rep) extras.rep = &*d->evidence->rep;
            if (d->evidence->cotree) extras.cotree = &*d->evidence->cotree;
        }
        text = "c generated class=" + opt.gen_class + " n=" + std::to_string(opt.n) + " seed=" +
               std::to_string(opt.seed) + '\n' + format_instance(d->instance, extras);
    } else {
        const auto& v = std::get<GeneratedVcr>(gen);
        text = "c generated class=vcr n=" + std::to_string(opt.n) + " seed=" + std::to_string(opt.seed) + '\n' +
               format_instance(v.instance);
    }
    io.write(opt.output, text);
    return kExitYes;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Dominating set reconfiguration under token addition/removal", "dsr"};
    app.require_subcommand(1, 1);
    app.set_version_flag("--version", "dsr 0.1.0");

    auto common = [&](CLI::App* sub) {
        sub->add_option("input", opt.input, "instance file, '-' for stdin");
        sub->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));
    };
    auto solver_flags = [&](CLI::App* sub) {
        sub->add_option("--class", opt.cls)->check(CLI::IsMember({"tree", "interval", "cograph", "auto"}));
        sub->add_option("--rep", opt.rep_path, "interval representation file");
        sub->add_flag("--oracle-fallback", opt.oracle_fallback, "use exhaustive search for unsupported classes");
        sub->add_option("--budget", opt.budget, "oracle state budget");
    };

    auto* decide_cmd = app.add_subcommand("decide", "print YES/NO and the reason code");
    common(decide_cmd);
    solver_flags(decide_cmd);

    auto* solve_cmd = app.add_subcommand("solve", "decide and build a reconfiguration sequence");
    common(solve_cmd);
    solver_flags(solve_cmd);
    solve_cmd->add_flag("--emit-sequence", opt.emit_sequence);
    solve_cmd->add_option("-o,--output", opt.output, "sequence output path");

    auto* verify_cmd = app.add_subcommand("verify", "check a sequence against an instance");
    common(verify_cmd);
    verify_cmd->add_option("sequence", opt.sequence, "sequence file, '-' for stdin");

    auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive breadth-first search (n <= 20)");
    common(oracle_cmd);
    oracle_cmd->add_option("--budget", opt.budget);
    oracle_cmd->add_flag("--emit-sequence", opt.emit_sequence);
    oracle_cmd->add_option("-o,--output", opt.output);

    auto* label_cmd = app.add_subcommand("label", "print the canonical labelling and cells");
    common(label_cmd);
    label_cmd->add_option("--class", opt.cls)->check(CLI::IsMember({"tree", "interval", "cograph", "auto"}));
    label_cmd->add_option("--rep", opt.rep_path);

    auto* reduce_cmd = app.add_subcommand("reduce", "build a reduced instance and its .map sidecar");
    reduce_cmd->add_option("input", opt.input);
    reduce_cmd->add_option("--kind", opt.kind)->required()->check(CLI::IsMember({"vcr-dsr", "vcr-split", "split-bipartite"}));
    reduce_cmd->add_option("-o,--output", opt.output);
    reduce_cmd->add_option("--map", opt.map_path, "sidecar path (default <output>.map)");

    auto* gen_cmd = app.add_subcommand("generate", "write a seeded random instance");
    gen_cmd->add_option("--class", opt.gen_class)->check(CLI::IsMember({"tree", "interval", "cograph", "general", "vcr"}));
    gen_cmd->add_option("--n", opt.n)->check(CLI::PositiveNumber);
    gen_cmd->add_option("--seed", opt.seed);
    gen_cmd->add_option("--k-policy", opt.k_policy)->check(CLI::IsMember({"tight", "slack", "explicit"}));
    gen_cmd->add_option("--k", opt.k);
    gen_cmd->add_option("--density", opt.density);
    gen_cmd->add_flag("--disconnected", opt.disconnected);
    gen_cmd->add_option("-o,--output", opt.output);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion& e) {
        out << e.what() << '\n';
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }

    Io io(in, out);
    const auto t0 = Clock::now();
    try {
        if (*decide_cmd) return report(opt, io, decide_or_solve(opt, io, false), t0);
        if (*solve_cmd) return report(opt, io, decide_or_solve(opt, io, true), t0);
        if (*verify_cmd) return cmd_verify(opt, io, t0);
        if (*oracle_cmd) {
            DsrInstance inst = parse_dsr_instance(io.read(opt.input));
            return report(opt, io, run_oracle(inst, opt.budget), t0);
        }
        if (*label_cmd) return cmd_label(opt, io, t0);
        if (*reduce_cmd) return cmd_reduce(opt, io);
        if (*gen_cmd) return cmd_generate(opt, io);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}

}  // namespace dsr::cli
