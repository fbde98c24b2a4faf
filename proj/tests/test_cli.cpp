#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dsr/cli.hpp"
#include "dsr/io.hpp"

using namespace dsr;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() {
        path_ = std::filesystem::temp_directory_path() / ("dsr-cli-" + std::to_string(::getpid()) + "-" + std::to_string(counter_++));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }
    std::string file(const std::string& name, const std::string& contents = "") const {
        auto p = (path_ / name).string();
        if (!contents.empty()) std::ofstream(p) << contents;
        return p;
    }

private:
    std::filesystem::path path_;
    static inline int counter_ = 0;
};

const char* kP3 = "p ds 3 2\ne 1 2\ne 2 3\ns 1 3\nt 2\nk 2\n";

}  // namespace

TEST(Cli, DecideP3No) {
    auto r = run({"decide", "--class", "tree"}, kP3);
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out, "NO MINIMAL_ENDPOINT_AT_K\n");
}

TEST(Cli, DecideAutoClass) {
    auto r = run({"decide"}, "p ds 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\ns 1 2\nt 3 4\nk 3\n");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "YES SLACK_K\n");
}

TEST(Cli, SolveThenVerify) {
    TempDir dir;
    auto inst = dir.file("p4.txt", "p ds 4 3\ne 1 2\ne 2 3\ne 3 4\ns 2 3\nt 1 3\nk 3\n");
    auto seq = dir.file("p4.seq");
    auto r = run({"solve", inst, "--class", "tree", "--emit-sequence", "-o", seq});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "YES SLACK_K\n");
    auto v = run({"verify", inst, seq});
    EXPECT_EQ(v.code, 0) << v.out;
    EXPECT_EQ(v.out.rfind("VALID", 0), 0u);
}

TEST(Cli, SolveToStdoutIsASequenceFile) {
    TempDir dir;
    auto inst = dir.file("p3.txt", "p ds 3 2\ne 1 2\ne 2 3\ns 1 2\nt 2 3\nk 2\n");
    auto r = run({"solve", inst, "--emit-sequence"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto v = run({"verify", inst, "-"}, r.out);
    EXPECT_EQ(v.code, 0) << v.out;
}

TEST(Cli, VerifyRejectsBadSequence) {
    TempDir dir;
    auto inst = dir.file("p3.txt", kP3);
    auto r = run({"verify", inst, "-"}, "s 1 3\n- 1\n+ 2\n- 3\n");
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("NOT_DOMINATING"), std::string::npos);
}

TEST(Cli, GeneratePipeline) {
    auto g = run({"generate", "--class", "tree", "--n", "8", "--seed", "1"});
    ASSERT_EQ(g.code, 0);
    auto d = run({"decide", "--class", "tree"}, g.out);
    EXPECT_TRUE(d.code == 0 || d.code == 1) << d.err;
    EXPECT_EQ(g.out, run({"generate", "--class", "tree", "--n", "8", "--seed", "1"}).out);
}

TEST(Cli, GeneratedIntervalAndCographSolve) {
    for (const char* cls : {"interval", "cograph"}) {
        for (int seed = 0; seed < 5; ++seed) {
            auto g = run({"generate", "--class", cls, "--n", "9", "--seed", std::to_string(seed), "--k-policy", "tight"});
            ASSERT_EQ(g.code, 0) << g.err;
            TempDir dir;
            auto inst = dir.file("g.txt", g.out);
            auto s = run({"solve", inst, "--class", cls, "--emit-sequence"});
            ASSERT_NE(s.code, 2) << s.err;
            auto o = run({"oracle", inst});
            EXPECT_EQ(s.code, o.code) << cls << " seed " << seed;
            if (s.code == 0) {
                EXPECT_EQ(run({"verify", inst, "-"}, s.out).code, 0);
            }
        }
    }
}

TEST(Cli, JsonEnvelope) {
    TempDir dir;
    auto inst = dir.file("p3.txt", "p ds 3 2\ne 1 2\ne 2 3\ns 1 2\nt 2 3\nk 2\n");
    auto r = run({"solve", inst, "--emit-sequence", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("\"schema\":1"), std::string::npos);
    EXPECT_NE(r.out.find("\"answer\":\"YES\""), std::string::npos);
    EXPECT_NE(r.out.find("\"reason\":\"NONMINIMAL_ENDPOINTS\""), std::string::npos);
    EXPECT_NE(r.out.find("\"sequence\""), std::string::npos);
    EXPECT_NE(r.out.find("\"states_expanded\""), std::string::npos);
}

TEST(Cli, UnsupportedClassAndFallback) {
    const char* c5 = "p ds 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\ns 1 3\nt 2 4\nk 2\n";
    auto r = run({"decide"}, c5);
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("error"), std::string::npos);
    auto f = run({"decide", "--oracle-fallback"}, c5);
    EXPECT_TRUE(f.code == 0 || f.code == 1);
    EXPECT_NE(f.out.find("ORACLE"), std::string::npos);
    auto b = run({"decide", "--oracle-fallback", "--budget", "1"},
                 "p ds 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\ns 1 3\nt 2 4\nk 3\n");
    EXPECT_EQ(b.code, 2);
}

TEST(Cli, ParseErrorsExitTwo) {
    auto r = run({"decide"}, "e 1 1\n");
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("line 1"), std::string::npos);
    EXPECT_EQ(run({"bogus"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"decide", "--class", "planar"}, kP3).code, 2);
}

TEST(Cli, LabelTree) {
    auto r = run({"label", "--class", "tree"}, "p ds 4 3\ne 1 2\ne 2 3\ne 3 4\n");
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "v 1 2\nv 2 3\nv 3 2\nv 4 1\ncell 1 3 4\ncell 2 1 2\n");
}

TEST(Cli, LabelIntervalFile) {
    auto r = run({"label", "--class", "interval"}, "i 1 0 1\ni 2 0.5 1.5\ni 3 1.2 2\n");
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "v 1 1\nv 2 2\nv 3 3\ncell 1 1 2 3\n");
}

TEST(Cli, LabelCograph) {
    auto r = run({"label", "--class", "cograph"}, "p ds 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n");
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "canonical 1 2\nside_a 1 3\nside_b 2 4\n");
}

TEST(Cli, ReduceWritesMap) {
    TempDir dir;
    auto vcr = dir.file("k2.txt", "p ds 2 1\ne 1 2\ns 1\nt 2\nk 2\n");
    auto out = dir.file("k2.dsr");
    auto r = run({"reduce", vcr, "--kind", "vcr-dsr", "-o", out});
    ASSERT_EQ(r.code, 0) << r.err;
    std::ifstream f(out), m(out + ".map");
    DsrInstance inst = parse_dsr_instance(read_all(f));
    EXPECT_EQ(inst.graph.m(), 3u);
    ReductionMap map = parse_reduction_map(read_all(m));
    EXPECT_EQ(map.original_n, 2);
    ASSERT_EQ(map.gadgets.size(), 1u);

    auto split = dir.file("k2.split");
    ASSERT_EQ(run({"reduce", vcr, "--kind", "vcr-split", "-o", split}).code, 0);
    auto bip = dir.file("k2.bip");
    auto b = run({"reduce", split, "--kind", "split-bipartite", "-o", bip});
    ASSERT_EQ(b.code, 0) << b.err;
    std::ifstream bf(bip);
    DsrInstance bi = parse_dsr_instance(read_all(bf));
    EXPECT_EQ(bi.graph.n(), 5);
    EXPECT_EQ(bi.k, 3u);
}

TEST(Cli, Help) {
    auto r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("decide"), std::string::npos);
}
