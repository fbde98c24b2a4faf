#include <gtest/gtest.h>

#include "dsr/domset.hpp"
#include "dsr/generators.hpp"
#include "dsr/reconfig.hpp"
#include "support.hpp"

using namespace dsr;

TEST(Sequence, ApplyAddRemove) {
    ReconfSequence s{VertexSet{0}, {Move::add(1), Move::remove(0)}};
    EXPECT_EQ(apply(s), (std::vector<VertexSet>{{0}, {0, 1}, {1}}));
    EXPECT_EQ(final_set(s), (VertexSet{1}));
    EXPECT_EQ(max_cardinality(s), 2u);
    EXPECT_EQ(touch_counts(s, 3), (std::vector<int>{1, 1, 0}));
}

TEST(Sequence, EmptyMoves) {
    ReconfSequence s{VertexSet{0}, {}};
    EXPECT_EQ(apply(s), (std::vector<VertexSet>{{0}}));
    EXPECT_EQ(reverse(s), s);
}

TEST(Sequence, AddPresentThrows) {
    ReconfSequence s{VertexSet{0}, {Move::add(0)}};
    EXPECT_THROW(apply(s), InvalidMove);
    ReconfSequence t{VertexSet{0}, {Move::remove(2)}};
    EXPECT_THROW(final_set(t), InvalidMove);
}

TEST(Sequence, Reverse) {
    ReconfSequence s{VertexSet{0}, {Move::add(1), Move::remove(0)}};
    ReconfSequence r = reverse(s);
    EXPECT_EQ(apply(r), (std::vector<VertexSet>{{1}, {0, 1}, {0}}));
    EXPECT_EQ(reverse(r), s);
}

TEST(Sequence, Concatenate) {
    ReconfSequence a{VertexSet{0}, {Move::add(1)}};
    ReconfSequence b{VertexSet{0, 1}, {Move::remove(0)}};
    EXPECT_EQ(concatenate(a, b).moves.size(), 2u);
    EXPECT_THROW(concatenate(b, a), Error);
}

TEST(Verify, SixSetSchema) {
    Graph g = path_graph(6);
    DsrInstance inst{g, VertexSet{0, 2, 4}, VertexSet{1, 2, 3, 5}, 4};
    ReconfSequence s{inst.source, {Move::add(5), Move::remove(4), Move::add(1), Move::remove(0), Move::add(3)}};
    ASSERT_EQ(apply(s).size(), 6u);
    EXPECT_TRUE(verify(inst, s).ok());
    inst.k = 3;
    auto r = verify(inst, s);
    EXPECT_EQ(r.violation, Violation::OverThreshold);
    EXPECT_EQ(r.index, 1u);
}

TEST(Verify, EqualEndpointsEmpty) {
    DsrInstance inst{path_graph(3), VertexSet{1}, VertexSet{1}, 1};
    EXPECT_TRUE(verify(inst, ReconfSequence{VertexSet{1}, {}}).ok());
}

TEST(Verify, MiddleSetNotDominating) {
    Graph g = path_graph(3);
    DsrInstance inst{g, VertexSet{0, 1}, VertexSet{1, 2}, 3};
    ReconfSequence s{inst.source, {Move::remove(1), Move::add(2), Move::add(1), Move::remove(0)}};
    auto r = verify(inst, s);
    EXPECT_EQ(r.violation, Violation::NotDominating);
    EXPECT_EQ(r.index, 1u);
}

TEST(Verify, EndpointMismatches) {
    Graph g = path_graph(3);
    DsrInstance inst{g, VertexSet{1}, VertexSet{0, 1}, 3};
    EXPECT_EQ(verify(inst, ReconfSequence{VertexSet{0, 1}, {}}).violation, Violation::StartMismatch);
    EXPECT_EQ(verify(inst, ReconfSequence{VertexSet{1}, {Move::add(2)}}).violation, Violation::FinalMismatch);
    EXPECT_EQ(verify(inst, ReconfSequence{VertexSet{1}, {Move::remove(0)}}).violation, Violation::BadMove);
}

TEST(Instance, Validation) {
    Graph g = path_graph(3);
    EXPECT_NO_THROW(validate_instance({g, VertexSet{1}, VertexSet{0, 2}, 2}));
    EXPECT_THROW(validate_instance({g, VertexSet{0}, VertexSet{1}, 2}), Error);
    EXPECT_THROW(validate_instance({g, VertexSet{1}, VertexSet{0, 2}, 1}), Error);
}

TEST(Oracle, P3MinimalAtK) {
    DsrInstance inst{path_graph(3), VertexSet{0, 2}, VertexSet{1}, 2};
    auto r = oracle_reachable(inst);
    EXPECT_FALSE(r.reachable);
    EXPECT_FALSE(r.sequence);
}

TEST(Oracle, P3OneMove) {
    DsrInstance inst{path_graph(3), VertexSet{0, 1}, VertexSet{1}, 2};
    auto r = oracle_reachable(inst);
    ASSERT_TRUE(r.reachable);
    ASSERT_TRUE(r.sequence);
    EXPECT_EQ(r.sequence->length(), 1u);
    EXPECT_TRUE(verify(inst, *r.sequence).ok());
}

TEST(Oracle, EqualEndpoints) {
    DsrInstance inst{cycle_graph(5), VertexSet{0, 2}, VertexSet{0, 2}, 2};
    auto r = oracle_reachable(inst);
    ASSERT_TRUE(r.reachable);
    EXPECT_EQ(r.sequence->length(), 0u);
}

TEST(Oracle, Budget) {
    DsrInstance inst{Graph(12), VertexSet{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11},
                     VertexSet{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}, 12};
    inst.graph = path_graph(12);
    inst.target = VertexSet{1, 4, 7, 10};
    EXPECT_THROW(oracle_reachable(inst, 10), BudgetExceeded);
    EXPECT_THROW(oracle_reachable({path_graph(kOracleVertexLimit + 1), VertexSet{}, VertexSet{}, 1}), Error);
}

TEST(Oracle, ShortestWitnessesVerify) {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        StreamRng rng(seed, "oracle-test");
        Graph g = random_graph(static_cast<Vertex>(rng.uniform(2, 9)), 0.4, rng);
        VertexSet s = random_dominating_set(g, 0.5, rng), t = random_dominating_set(g, 0.5, rng);
        DsrInstance inst{g, s, t, std::max(s.size(), t.size()) + static_cast<std::size_t>(rng.uniform(0, 1))};
        auto r = oracle_reachable(inst);
        if (r.reachable) {
            ASSERT_TRUE(r.sequence);
            EXPECT_TRUE(verify(inst, *r.sequence).ok()) << "seed " << seed;
            EXPECT_GE(r.sequence->length(), set_difference(s, t).size() + set_difference(t, s).size());
        }
        // k >= max + 1 is always reachable
        if (inst.k > std::max(s.size(), t.size())) {
            EXPECT_TRUE(r.reachable) << "seed " << seed;
        }
    }
}
