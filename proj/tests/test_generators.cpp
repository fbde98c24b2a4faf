#include <gtest/gtest.h>

#include "dsr/domset.hpp"
#include "dsr/generators.hpp"
#include "dsr/io.hpp"

using namespace dsr;

namespace {

std::string serialize(const Generated& g) {
    if (auto* d = std::get_if<GeneratedDsr>(&g)) {
        InstanceExtras extras;
        if (d->evidence && d->evidence->rep) extras.rep = &*d->evidence->rep;
        if (d->evidence && d->evidence->cotree) extras.cotree = &*d->evidence->cotree;
        return format_instance(d->instance, extras);
    }
    return format_instance(std::get<GeneratedVcr>(g).instance);
}

}  // namespace

TEST(StreamRng, Deterministic) {
    StreamRng a(42, "x"), b(42, "x"), c(42, "y");
    EXPECT_EQ(a.next(), b.next());
    EXPECT_NE(StreamRng(42, "x").next(), c.next());
    for (int i = 0; i < 1000; ++i) {
        auto v = a.uniform(-3, 5);
        EXPECT_GE(v, -3);
        EXPECT_LE(v, 5);
    }
}

TEST(Generate, SingleVertexTree) {
    GenSpec spec;
    spec.n = 1;
    auto g = std::get<GeneratedDsr>(generate(spec));
    EXPECT_EQ(g.instance.graph.n(), 1);
    EXPECT_EQ(g.instance.source, (VertexSet{0}));
    EXPECT_EQ(g.instance.target, (VertexSet{0}));
    EXPECT_GE(g.instance.k, 1u);
}

TEST(Generate, IntervalDeterminism) {
    GenSpec spec;
    spec.cls = GenClass::Interval;
    spec.n = 10;
    spec.seed = 7;
    EXPECT_EQ(serialize(generate(spec)), serialize(generate(spec)));
    spec.seed = 8;
    GenSpec other = spec;
    other.seed = 7;
    EXPECT_NE(serialize(generate(spec)), serialize(generate(other)));
}

TEST(Generate, TightCographHitsK) {
    GenSpec spec;
    spec.cls = GenClass::Cograph;
    spec.n = 12;
    spec.k_policy = KPolicy::Tight;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        spec.seed = seed;
        auto g = std::get<GeneratedDsr>(generate(spec));
        EXPECT_EQ(std::max(g.instance.source.size(), g.instance.target.size()), g.instance.k);
    }
}

TEST(Generate, ExplicitK) {
    GenSpec spec;
    spec.n = 6;
    spec.k_policy = KPolicy::Explicit;
    spec.explicit_k = 6;
    EXPECT_EQ(std::get<GeneratedDsr>(generate(spec)).instance.k, 6u);
    spec.explicit_k = 0;
    EXPECT_THROW(generate(spec), Error);
}

TEST(Generate, InvariantsAcrossClasses) {
    for (GenClass cls : {GenClass::Tree, GenClass::Interval, GenClass::Cograph, GenClass::General}) {
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            GenSpec spec;
            spec.cls = cls;
            spec.seed = seed;
            spec.n = static_cast<Vertex>(1 + seed % 15);
            auto g = std::get<GeneratedDsr>(generate(spec));
            const auto& inst = g.instance;
            EXPECT_NO_THROW(validate_instance(inst));
            EXPECT_TRUE(is_dominating(inst.graph, inst.source));
            EXPECT_TRUE(is_dominating(inst.graph, inst.target));
            if (cls == GenClass::General) {
                EXPECT_FALSE(g.evidence);
                continue;
            }
            ASSERT_TRUE(g.evidence);
            ClassEvidence ev = *g.evidence;
            EXPECT_NO_THROW(check_evidence(inst.graph, ev)) << to_string(cls) << " seed " << seed;
            if (cls != GenClass::Tree) {
                EXPECT_TRUE(is_connected(inst.graph));
            } else {
                EXPECT_TRUE(is_tree(inst.graph));
            }
        }
    }
}

TEST(Generate, VcrInstances) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        GenSpec spec;
        spec.cls = GenClass::Vcr;
        spec.seed = seed;
        spec.n = static_cast<Vertex>(2 + seed % 6);
        spec.density = 1.2;
        auto v = std::get<GeneratedVcr>(generate(spec)).instance;
        EXPECT_NO_THROW(validate_vcr_instance(v));
        EXPECT_GT(v.graph.m(), 0u);
        for (Vertex u = 0; u < v.graph.n(); ++u) EXPECT_GT(v.graph.degree(u), 0u);
    }
}

TEST(Generate, NamesRoundTrip) {
    for (GenClass c : {GenClass::Tree, GenClass::Interval, GenClass::Cograph, GenClass::General, GenClass::Vcr})
        EXPECT_EQ(parse_gen_class(to_string(c)), c);
    for (KPolicy p : {KPolicy::Tight, KPolicy::Slack, KPolicy::Explicit}) EXPECT_EQ(parse_k_policy(to_string(p)), p);
    EXPECT_THROW(parse_gen_class("planar"), Error);
}
