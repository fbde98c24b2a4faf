#include <gtest/gtest.h>

#include "dsr/domset.hpp"
#include "dsr/generators.hpp"
#include "dsr/scheme.hpp"

using namespace dsr;

namespace {

IntervalRepresentation p3_rep() {
    IntervalRepresentation rep;
    rep.intervals = {{Rational(0), Rational(1)}, {Rational(1, 2), Rational(3, 2)}, {Rational(6, 5), Rational(2)}};
    return rep;
}

}  // namespace

TEST(Decide, P3SlackK) {
    DsrInstance inst{path_graph(3), VertexSet{0, 2}, VertexSet{1}, 3};
    EXPECT_EQ(decide(inst, ClassEvidence::tree()), (Decision{Answer::Yes, Reason::SlackK}));
}

TEST(Decide, P3MinimalAtK) {
    DsrInstance inst{path_graph(3), VertexSet{0, 2}, VertexSet{1}, 2};
    EXPECT_EQ(decide(inst, ClassEvidence::tree()), (Decision{Answer::No, Reason::MinimalEndpointAtK}));
    EXPECT_EQ(decide(inst, ClassEvidence::interval(p3_rep())).answer, Answer::No);
    EXPECT_FALSE(oracle_reachable(inst).reachable);
}

TEST(Decide, P3EqualEndpoints) {
    DsrInstance inst{path_graph(3), VertexSet{0, 2}, VertexSet{0, 2}, 2};
    EXPECT_EQ(decide(inst, ClassEvidence::tree()), (Decision{Answer::Yes, Reason::EqualEndpoints}));
    auto r = solve(inst, ClassEvidence::tree());
    ASSERT_TRUE(r.sequence);
    EXPECT_EQ(r.sequence->length(), 0u);
}

TEST(Decide, P3NonminimalEndpoints) {
    DsrInstance inst{path_graph(3), VertexSet{0, 1}, VertexSet{1, 2}, 2};
    EXPECT_EQ(decide(inst, ClassEvidence::tree()), (Decision{Answer::Yes, Reason::NonminimalEndpoints}));
    EXPECT_TRUE(oracle_reachable(inst).reachable);
    auto r = solve(inst, ClassEvidence::tree());
    ASSERT_TRUE(r.sequence);
    EXPECT_TRUE(verify(inst, *r.sequence).ok());
}

TEST(Solve, P4) {
    DsrInstance inst{path_graph(4), VertexSet{1, 2}, VertexSet{0, 2}, 3};
    auto r = solve(inst, ClassEvidence::tree());
    EXPECT_EQ(r.decision.answer, Answer::Yes);
    ASSERT_TRUE(r.sequence);
    EXPECT_TRUE(verify(inst, *r.sequence).ok());
    EXPECT_TRUE(oracle_reachable(inst).reachable);
}

TEST(Solve, NoSequenceOnNo) {
    DsrInstance inst{path_graph(3), VertexSet{0, 2}, VertexSet{1}, 2};
    EXPECT_FALSE(solve(inst, ClassEvidence::tree()).sequence);
}

TEST(Solve, ForcedCanonicalRemovalStaysWithinTwoTouches) {
    DsrInstance inst{Graph(5, {{0, 2}, {1, 2}, {1, 3}, {3, 4}}), VertexSet{0, 2, 4}, VertexSet{2, 3}, 3};
    auto r = solve(inst, ClassEvidence::tree());
    ASSERT_TRUE(r.sequence);
    EXPECT_TRUE(verify(inst, *r.sequence).ok());
    for (int t : touch_counts(*r.sequence, 5)) EXPECT_LE(t, 2);
}

TEST(Solve, CographForcedRemovalStaysWithinTwoTouches) {
    Cotree ct = parse_cotree("J(U(J(U(1 7) 5) J(2 6 U(8 9))) U(3 4))");
    Graph g = evaluate_cotree(ct, 9);
    DsrInstance inst{g, VertexSet{0, 4, 5}, VertexSet{1, 4}, 3};
    auto r = solve(inst, ClassEvidence::cograph(ct));
    ASSERT_TRUE(r.sequence);
    EXPECT_TRUE(verify(inst, *r.sequence).ok());
    for (int t : touch_counts(*r.sequence, g.n())) EXPECT_LE(t, 2);
}

TEST(Evidence, Mismatch) {
    DsrInstance inst{cycle_graph(5), VertexSet{0, 2}, VertexSet{1, 3}, 3};
    EXPECT_THROW(decide(inst, ClassEvidence::tree()), UnsupportedClass);
    EXPECT_THROW(decide(inst, ClassEvidence::cograph()), UnsupportedClass);
    EXPECT_THROW(decide({path_graph(3), VertexSet{1}, VertexSet{1}, 1}, ClassEvidence::cograph(parse_cotree("J(1 U(2 3))"))),
                 UnsupportedClass);
    ClassEvidence iv{GraphClass::Interval, {}, {}};
    EXPECT_THROW(decide(inst, iv), UnsupportedClass);
}

TEST(Compose, SingleComponentIsIdentity) {
    ClassSolver whole = build_class_solver(path_graph(4), ClassEvidence::tree());
    EXPECT_EQ(whole.canonical, (VertexSet{0, 2}));
}

TEST(Compose, TwoP3Components) {
    Graph g(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
    ClassSolver s = build_class_solver(g, ClassEvidence::tree());
    EXPECT_EQ(s.canonical, (VertexSet{1, 4}));
    VertexSet d{0, 2, 3, 5};
    auto seq = s.transform(d);
    EXPECT_TRUE(verify({g, d, s.canonical, d.size() + 1}, seq).ok());
}

TEST(Compose, IsolatedVertexInCanonical) {
    Graph g(4, {{0, 1}, {1, 2}});
    for (ClassEvidence ev : {ClassEvidence::tree(), ClassEvidence::cograph()}) {
        ClassSolver s = build_class_solver(g, ev);
        EXPECT_TRUE(s.canonical.contains(3));
        EXPECT_EQ(s.canonical.size(), 2u);
    }
}

TEST(Compose, DisconnectedCographAndInterval) {
    Graph g(5, {{0, 1}, {0, 2}, {1, 2}, {3, 4}});
    ClassSolver c = build_class_solver(g, ClassEvidence::cograph());
    EXPECT_EQ(c.canonical.size(), 2u);
    IntervalRepresentation rep;
    rep.intervals = {{Rational(0), Rational(1)}, {Rational(0), Rational(2)}, {Rational(1), Rational(3)},
                     {Rational(5), Rational(6)}, {Rational(6), Rational(7)}};
    ClassSolver i = build_class_solver(g, ClassEvidence::interval(rep));
    EXPECT_EQ(i.canonical.size(), 2u);
    VertexSet d{0, 1, 2, 3, 4};
    EXPECT_TRUE(verify({g, d, c.canonical, 6}, c.transform(d)).ok());
    EXPECT_TRUE(verify({g, d, i.canonical, 6}, i.transform(d)).ok());
}

TEST(SchemeProperties, AgreesWithOracleAcrossClasses) {
    for (GenClass cls : {GenClass::Tree, GenClass::Interval, GenClass::Cograph}) {
        for (std::uint64_t seed = 0; seed < 60; ++seed) {
            GenSpec spec;
            spec.cls = cls;
            spec.seed = seed;
            spec.n = static_cast<Vertex>(2 + seed % 9);
            spec.k_policy = seed % 2 ? KPolicy::Tight : KPolicy::Slack;
            auto gen = std::get<GeneratedDsr>(generate(spec));
            const auto& inst = gen.instance;
            auto r = solve(inst, *gen.evidence);
            const bool oracle = oracle_reachable(inst).reachable;
            ASSERT_EQ(r.decision.answer == Answer::Yes, oracle) << to_string(cls) << " seed " << seed;
            if (oracle) {
                ASSERT_TRUE(r.sequence);
                auto report = verify(inst, *r.sequence);
                EXPECT_TRUE(report.ok()) << to_string(cls) << " seed " << seed << ": " << report.message;
                for (int t : touch_counts(*r.sequence, inst.graph.n())) EXPECT_LE(t, 2);
            }
        }
    }
}
