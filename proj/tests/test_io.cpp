#include <gtest/gtest.h>

#include "dsr/generators.hpp"
#include "dsr/io.hpp"

using namespace dsr;

TEST(Io, InstanceRoundTrip) {
    DsrInstance inst{path_graph(4), VertexSet{1, 2}, VertexSet{0, 2}, 3};
    std::string text = format_instance(inst);
    DsrInstance back = parse_dsr_instance(text);
    EXPECT_EQ(back.graph, inst.graph);
    EXPECT_EQ(back.source, inst.source);
    EXPECT_EQ(back.target, inst.target);
    EXPECT_EQ(back.k, inst.k);
    EXPECT_EQ(format_instance(back), text);
}

TEST(Io, ExtrasRoundTrip) {
    IntervalRepresentation rep;
    rep.intervals = {{Rational(0), Rational(1)}, {Rational(1, 2), Rational(3, 2)}, {Rational(6, 5), Rational(2)}};
    Cotree ct = parse_cotree("J(U(1 3) 2)");
    VertexSet clique{0, 1};
    std::string text = format_instance(path_graph(3), VertexSet{1}, VertexSet{1}, 1, {&rep, nullptr, &clique});
    InstanceFile f = parse_instance_file(text);
    ASSERT_TRUE(f.rep);
    EXPECT_EQ(f.rep->intervals[2].left, Rational(6, 5));
    EXPECT_EQ(*f.clique, clique);
    std::string with_ct = format_instance(path_graph(3), VertexSet{1}, VertexSet{1}, 1, {nullptr, &ct, nullptr});
    f = parse_instance_file(with_ct);
    ASSERT_TRUE(f.cotree);
    EXPECT_EQ(format_cotree(*f.cotree), "J(U(1 3) 2)");
}

TEST(Io, InstanceErrors) {
    EXPECT_THROW(parse_dsr_instance("p ds 2 1\ne 1 2\ns 1\nk 1\n"), ParseError);
    EXPECT_THROW(parse_dsr_instance("p ds 2 1\ne 1 2\ns 1\nt 3\nk 1\n"), ParseError);
    EXPECT_THROW(parse_dsr_instance("p ds 2 1\ne 1 2\ns 1 1\nt 2\nk 1\n"), ParseError);
    EXPECT_THROW(parse_dsr_instance("p ds 2 1\ne 1 2\ns 1\nt 2\nk 0\n"), ParseError);
    EXPECT_THROW(parse_instance_file("p ds 2 1\ne 1 2\nq 5\n"), ParseError);
    EXPECT_THROW(parse_instance_file("p ds 2 1\ne 1 2\ni 1 0 1\n"), ParseError);
    EXPECT_THROW(parse_instance_file("p ds 2 1\ne 1 2\ni 1 3 1\ni 2 0 1\n"), ParseError);
    EXPECT_THROW(parse_instance_file("p ds 2 1\ne 1 2\nct J(1 1)\n"), ParseError);
}

TEST(Io, IntervalFile) {
    auto rep = parse_interval_file("c p3\ni 1 0 1\ni 2 0.5 1.5\ni 3 6/5 2\n");
    ASSERT_EQ(rep.size(), 3);
    EXPECT_EQ(rep[1].left, Rational(1, 2));
    EXPECT_EQ(interval_graph(rep), path_graph(3));
    EXPECT_EQ(parse_interval_file(format_interval_rep(rep)).intervals.size(), 3u);
    EXPECT_THROW(parse_interval_file("i 1 0 1\ni 3 0 1\n"), ParseError);
}

TEST(Io, SequenceRoundTrip) {
    ReconfSequence seq{VertexSet{0, 2}, {Move::add(1), Move::remove(0), Move::remove(2)}};
    std::string text = format_sequence(seq);
    EXPECT_EQ(text, "s 1 3\n+ 2\n- 1\n- 3\n");
    EXPECT_EQ(parse_sequence(text), seq);
    EXPECT_EQ(parse_sequence("s\n"), (ReconfSequence{VertexSet{}, {}}));
    EXPECT_THROW(parse_sequence("+ 1\n"), ParseError);
    EXPECT_THROW(parse_sequence("s 1\n* 2\n"), ParseError);
}

TEST(Io, ReductionMapRoundTrip) {
    ReductionMap map{3, {{3, GadgetRole::EdgeVertex, 0, 1}, {4, GadgetRole::X}, {5, GadgetRole::Y}}};
    std::string text = format_reduction_map(map);
    EXPECT_EQ(parse_reduction_map(text), map);
    EXPECT_THROW(parse_reduction_map("g 4 x\n"), ParseError);
}

TEST(Io, GeneratedInstancesRoundTrip) {
    for (GenClass cls : {GenClass::Tree, GenClass::Interval, GenClass::Cograph}) {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            GenSpec spec;
            spec.cls = cls;
            spec.seed = seed;
            spec.n = 9;
            auto g = std::get<GeneratedDsr>(generate(spec));
            InstanceExtras extras;
            if (g.evidence->rep) extras.rep = &*g.evidence->rep;
            if (g.evidence->cotree) extras.cotree = &*g.evidence->cotree;
            std::string text = format_instance(g.instance, extras);
            InstanceFile f = parse_instance_file(text);
            extras = {};
            if (f.rep) extras.rep = &*f.rep;
            if (f.cotree) extras.cotree = &*f.cotree;
            EXPECT_EQ(format_instance(f.graph, *f.source, *f.target, *f.k, extras), text);
        }
    }
}
