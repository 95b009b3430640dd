#include <gtest/gtest.h>

#include "provsum/errors.hpp"
#include "provsum/generators.hpp"
#include "provsum/ptype.hpp"
#include "test_support.hpp"

namespace provsum {
namespace {

using testing::cycle_document;
using testing::path_enumeration_signature;
using Strings = std::vector<std::string>;

Strings render(const TypeTable& table, const TypeSet& set) {
    Strings out;
    for (TypeId id : set) out.push_back(table.render(id));
    std::sort(out.begin(), out.end());
    return out;
}

TEST(TypeTable, InterningAndRendering) {
    TypeTable table;
    TypeId agent = table.base("Agent");
    TypeId wat = table.apply(RelationLabel::wat, Direction::Forward, agent);
    TypeId used = table.apply(RelationLabel::used, Direction::Forward, wat);
    EXPECT_EQ(table.render(used), "used(wat(Agent))");
    EXPECT_EQ(table.level(used), 2u);
    EXPECT_EQ(table.level(agent), 0u);
    EXPECT_EQ(table.apply(RelationLabel::wat, Direction::Forward, table.base("Agent")), wat);
    EXPECT_EQ(table.find("used(wat(Agent))"), used);
    EXPECT_EQ(table.size(), 3u);
    TypeId inv = table.apply(RelationLabel::wat, Direction::Inverse, agent);
    EXPECT_NE(inv, wat);
    EXPECT_EQ(table.render(inv), "inv-wat(Agent)");
}

TEST(TypeTable, CapIsEnforced) {
    TypeTable table(2);
    TypeId base = table.base("Entity");
    table.apply(RelationLabel::wdf, Direction::Forward, base);
    EXPECT_THROW(table.apply(RelationLabel::mem, Direction::Forward, base), ResourceLimitError);
}

TEST(Level0Types, Examples) {
    ProvDocument cycle = cycle_document();
    TypeTable table;
    EXPECT_EQ(render(table, level0_types(cycle, "a", table)), Strings{"Activity"});
    EXPECT_THROW(level0_types(cycle, "missing", table), InputError);

    ProvDocument vote = ProvDocumentBuilder()
                            .add_core_type("v", CoreKind::Entity)
                            .add_app_type("v", "Vote")
                            .add_node("lonely")
                            .build();
    EXPECT_EQ(render(table, level0_types(vote, "v", table)), (Strings{"Entity", "Vote"}));
    EXPECT_TRUE(level0_types(vote, "lonely", table).empty());
}

TEST(NextLevel, CycleExample) {
    ProvDocument cycle = cycle_document();
    TypeTable table;
    NodeIndex a = cycle.index_of("a");
    auto level0 = level0_types(cycle, table);
    auto level1 = next_level(cycle, level0, Direction::Forward, table);
    EXPECT_EQ(render(table, level1[a]), Strings{"used(Entity)"});
    auto level2 = next_level(cycle, level1, Direction::Forward, table);
    EXPECT_EQ(render(table, level2[a]),
              (Strings{"used(wat(Agent))", "used(wdf(Entity))", "used(wgb(Activity))"}));
}

TEST(NextLevel, EdgelessGraph) {
    ProvDocument doc = ProvDocumentBuilder()
                           .add_core_type("x", CoreKind::Entity)
                           .add_core_type("y", CoreKind::Agent)
                           .build();
    TypeTable table;
    auto level1 = next_level(doc, level0_types(doc, table), Direction::Forward, table);
    for (const auto& set : level1) EXPECT_TRUE(set.empty());
}

// The six level-4 terms listed with the cyclic example. Every walk from a
// starts with 'used', so these belong to e2 (whose edges are wgb and wdf).
const Strings listed_level4 = {
    "wdf(wgb(used(wat(Agent))))", "wdf(wgb(used(wdf(Entity))))",
    "wdf(wgb(used(wgb(Activity))))", "wgb(used(wdf(wat(Agent))))",
    "wgb(used(wdf(wgb(Activity))))", "wgb(used(wgb(used(Entity))))",
};

TEST(ComputeSignatures, CycleLevelFour) {
    ProvDocument cycle = cycle_document();
    Signatures sig = compute_signatures(cycle, 4, Direction::Forward);
    NodeIndex a = cycle.index_of("a");
    NodeIndex e2 = cycle.index_of("e2");

    // Hand enumeration, cross-checked by the walk oracle below.
    const Strings a_level4 = {"used(wdf(wgb(used(Entity))))", "used(wgb(used(wat(Agent))))",
                              "used(wgb(used(wdf(Entity))))", "used(wgb(used(wgb(Activity))))"};
    EXPECT_EQ(sig.rendered(a)[4], a_level4);
    EXPECT_EQ(sig.rendered(e2)[4], listed_level4);
    EXPECT_EQ(sig.rendered(a), path_enumeration_signature(cycle, a, 4));
    EXPECT_EQ(sig.rendered(e2), path_enumeration_signature(cycle, e2, 4));
}

TEST(ComputeSignatures, LevelZeroOnly) {
    ProvDocument cycle = cycle_document();
    Signatures sig = compute_signatures(cycle, 0, Direction::Forward);
    TypeTable table;
    for (NodeIndex i = 0; i < cycle.node_count(); ++i) {
        ASSERT_EQ(sig.of(i).levels.size(), 1u);
        EXPECT_EQ(sig.rendered(i)[0], render(table, level0_types(cycle, i, table)));
    }
}

TEST(ComputeSignatures, ChainOfFour) {
    ProvDocument chain = generate_chain(4);
    Signatures sig = compute_signatures(chain, 2, Direction::Forward);
    auto of = [&](const char* id) { return sig.rendered(chain.index_of(id)); };
    const RenderedSignature e0 = {{"Entity"}, {}, {}};
    const RenderedSignature e1 = {{"Entity"}, {"wdf(Entity)"}, {}};
    const RenderedSignature e2 = {{"Entity"}, {"wdf(Entity)"}, {"wdf(wdf(Entity))"}};
    EXPECT_EQ(of("ex:e0"), e0);
    EXPECT_EQ(of("ex:e1"), e1);
    EXPECT_EQ(of("ex:e2"), e2);
    EXPECT_EQ(of("ex:e3"), e2);
    EXPECT_EQ(sig.key(chain.index_of("ex:e2")), sig.key(chain.index_of("ex:e3")));
    EXPECT_NE(sig.key(chain.index_of("ex:e1")), sig.key(chain.index_of("ex:e2")));
}

TEST(ComputeSignatures, InverseDirection) {
    ProvDocument chain = generate_chain(3);
    Signatures sig = compute_signatures(chain, 2, Direction::Inverse);
    // e0 is what everything else was derived from.
    const RenderedSignature e0 = {{"Entity"}, {"inv-wdf(Entity)"}, {"inv-wdf(inv-wdf(Entity))"}};
    EXPECT_EQ(sig.rendered(chain.index_of("ex:e0")), e0);
    EXPECT_EQ(sig.rendered(chain.index_of("ex:e2")), (RenderedSignature{{"Entity"}, {}, {}}));
}

TEST(ComputeSignatures, ResourceLimit) {
    EXPECT_THROW(compute_signatures(cycle_document(), 10, Direction::Forward, 20),
                 ResourceLimitError);
}

TEST(SignatureKey, EmptyLevelsSortFirst) {
    EXPECT_LT(signature_key({{"Entity"}, {}}), signature_key({{"Entity"}, {"wdf(Entity)"}}));
    EXPECT_NE(signature_key({{"A", "B"}}), signature_key({{"AB"}}));
    EXPECT_NE(signature_key({{"A"}, {}}), signature_key({{"A"}}));
}

// Walk oracle, level soundness and prefix monotonicity on small random graphs.
TEST(ComputeSignatures, PropertiesOnRandomGraphs) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const std::size_t n = 3 + seed % 10;
        ProvDocument doc = generate_random(n, 0.5 + 0.05 * static_cast<double>(seed % 30), seed);
        for (Direction dir : {Direction::Forward, Direction::Inverse}) {
            const std::size_t k = 3;
            Signatures sig = compute_signatures(doc, k, dir);
            for (NodeIndex i = 0; i < doc.node_count(); ++i) {
                ASSERT_EQ(sig.rendered(i), path_enumeration_signature(doc, i, k, dir))
                    << "seed " << seed << " node " << doc.node(i).id;
                for (std::size_t level = 0; level <= k; ++level) {
                    for (TypeId id : sig.of(i).levels[level]) {
                        EXPECT_EQ(sig.table().level(id), level);
                    }
                }
            }
            for (std::size_t j = 0; j < k; ++j) {
                Signatures shorter = compute_signatures(doc, j, dir);
                for (NodeIndex i = 0; i < doc.node_count(); ++i) {
                    EXPECT_EQ(sig.key(i, j), shorter.key(i));
                }
            }
        }
    }
}

TEST(ComputeSignatures, Deterministic) {
    ProvDocument doc = generate_random(200, 2.0, 7);
    Signatures first = compute_signatures(doc, 3, Direction::Forward);
    Signatures second = compute_signatures(doc, 3, Direction::Forward);
    for (NodeIndex i = 0; i < doc.node_count(); ++i) EXPECT_EQ(first.key(i), second.key(i));
}

} // namespace
} // namespace provsum
