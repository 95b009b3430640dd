#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "provsum/errors.hpp"
#include "provsum/generators.hpp"
#include "provsum/summary.hpp"
#include "provsum/summary_json.hpp"
#include "test_support.hpp"

namespace provsum {
namespace {

using testing::cycle_document;

std::uint64_t edge_count(const Summary& s, std::size_t src, std::size_t dst, RelationLabel label) {
    for (const auto& e : s.edges) {
        if (e.src == src && e.dst == dst && e.label == label) return e.count;
    }
    return 0;
}

std::size_t type_with_level0(const Summary& s, const std::string& base) {
    for (std::size_t i = 0; i < s.types.size(); ++i) {
        if (s.types[i].signature[0] == std::vector<std::string>{base}) return i;
    }
    ADD_FAILURE() << "no type with level-0 " << base;
    return 0;
}

TEST(AggregateNodes, ChainOfFourAtLevelOne) {
    ProvDocument chain = generate_chain(4);
    NodeAggregation agg = aggregate_nodes(compute_signatures(chain, 1, Direction::Forward));
    ASSERT_EQ(agg.types.size(), 2u);
    EXPECT_EQ(agg.types[0].id, "t_0");
    EXPECT_EQ(agg.types[0].node_weight, 1u);
    EXPECT_EQ(agg.types[0].signature, (RenderedSignature{{"Entity"}, {}}));
    EXPECT_EQ(agg.types[1].node_weight, 3u);
    EXPECT_EQ(agg.types[1].signature, (RenderedSignature{{"Entity"}, {"wdf(Entity)"}}));
    EXPECT_EQ(agg.assignment[chain.index_of("ex:e0")], 0u);
}

TEST(AggregateNodes, LevelZeroEntitiesAndEmpty) {
    ProvDocument chain = generate_chain(7);
    NodeAggregation agg = aggregate_nodes(compute_signatures(chain, 0, Direction::Forward));
    ASSERT_EQ(agg.types.size(), 1u);
    EXPECT_EQ(agg.types[0].node_weight, 7u);

    ProvDocument empty;
    EXPECT_TRUE(aggregate_nodes(compute_signatures(empty, 2, Direction::Forward)).types.empty());
}

TEST(AggregateEdges, ChainOfFourAtLevelOne) {
    ProvDocument chain = generate_chain(4);
    NodeAggregation agg = aggregate_nodes(compute_signatures(chain, 1, Direction::Forward));
    auto edges = aggregate_edges(chain, agg.assignment);
    ASSERT_EQ(edges.size(), 2u);
    Summary s;
    s.types = agg.types;
    s.edges = edges;
    EXPECT_EQ(edge_count(s, 1, 1, RelationLabel::wdf), 2u);
    EXPECT_EQ(edge_count(s, 1, 0, RelationLabel::wdf), 1u);
}

TEST(AggregateEdges, Edgeless) {
    ProvDocument doc = ProvDocumentBuilder().add_core_type("x", CoreKind::Entity).build();
    EXPECT_TRUE(aggregate_edges(doc, {0}).empty());
}

TEST(Apt, CycleAtLevelZero) {
    Summary s = apt(cycle_document(), 0);
    ASSERT_EQ(s.types.size(), 3u);
    std::size_t entity = type_with_level0(s, "Entity");
    std::size_t activity = type_with_level0(s, "Activity");
    std::size_t agent = type_with_level0(s, "Agent");
    EXPECT_EQ(s.types[entity].node_weight, 2u);
    EXPECT_EQ(s.types[activity].node_weight, 1u);
    EXPECT_EQ(s.types[agent].node_weight, 1u);
    ASSERT_EQ(s.edges.size(), 4u);
    EXPECT_EQ(edge_count(s, entity, activity, RelationLabel::wgb), 2u);
    EXPECT_EQ(edge_count(s, activity, entity, RelationLabel::used), 2u);
    EXPECT_EQ(edge_count(s, entity, agent, RelationLabel::wat), 1u);
    EXPECT_EQ(edge_count(s, entity, entity, RelationLabel::wdf), 1u);
    // Every node has an incoming edge, so there are no default roots.
    EXPECT_TRUE(s.roots.empty());
}

TEST(Apt, SingleEntityAnyLevel) {
    ProvDocument doc = ProvDocumentBuilder().add_core_type("x", CoreKind::Entity).build();
    for (std::size_t k = 0; k < 5; ++k) {
        Summary s = apt(doc, k);
        ASSERT_EQ(s.types.size(), 1u);
        EXPECT_EQ(s.types[0].node_weight, 1u);
        EXPECT_TRUE(s.edges.empty());
        EXPECT_EQ(s.roots, std::vector<std::size_t>{0});
    }
}

TEST(Apt, ChainBecomesIsomorphicFromLevelThree) {
    ProvDocument chain = generate_chain(4);
    for (std::size_t k : {3u, 4u, 6u}) {
        Summary s = apt(chain, k);
        ASSERT_EQ(s.types.size(), 4u);
        for (const auto& t : s.types) EXPECT_EQ(t.node_weight, 1u);
        EXPECT_EQ(s.edges.size(), 3u);
    }
}

TEST(Apt, RootsFollowAssignment) {
    ProvDocument chain = generate_chain(4);
    Summary s = apt(chain, 1);
    EXPECT_EQ(s.roots, std::vector<std::size_t>{s.assignment.at("ex:e3")});
}

Summary permuted(const Summary& s, std::uint64_t seed) {
    std::vector<std::size_t> perm(s.types.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), std::mt19937_64(seed));
    Summary out = s;
    for (std::size_t i = 0; i < s.types.size(); ++i) {
        out.types[perm[i]] = s.types[i];
        out.types[perm[i]].id = "renamed_" + std::to_string(perm[i] * 7 + 3);
    }
    for (auto& e : out.edges) {
        e.src = perm[e.src];
        e.dst = perm[e.dst];
    }
    for (auto& r : out.roots) r = perm[r];
    for (auto& [node, type] : out.assignment) type = perm[type];
    return out;
}

TEST(SummariesEquivalent, RenamingInvariance) {
    Summary s = apt(generate_random(40, 2.0, 3), 2);
    EXPECT_TRUE(summaries_equivalent(s, permuted(s, 11)));
}

TEST(SummariesEquivalent, ConsistentNodeRenaming) {
    ProvDocument doc = generate_random(30, 1.8, 5);
    ProvDocumentBuilder renamed;
    auto rename = [](const std::string& id) { return "zz:" + id + "_copy"; };
    for (const auto& node : doc.nodes()) {
        renamed.add_node(rename(node.id));
        for (CoreKind kind : node.core_types) renamed.add_core_type(rename(node.id), kind);
        for (const auto& t : node.app_types) renamed.add_app_type(rename(node.id), t);
    }
    for (const auto& edge : doc.edges()) {
        auto e = doc.named(edge);
        renamed.add_edge(rename(e.src), rename(e.dst), e.label);
    }
    EXPECT_TRUE(summaries_equivalent(apt(doc, 1), apt(renamed.build(), 1)));
}

TEST(SummariesEquivalent, DifferentLevels) {
    ProvDocument chain = generate_chain(4);
    EXPECT_FALSE(summaries_equivalent(apt(chain, 1), apt(chain, 3)));
    Summary a = apt(chain, 1);
    Summary b = a;
    b.edges[0].count += 1;
    EXPECT_FALSE(summaries_equivalent(a, b));
    EXPECT_TRUE(summaries_equivalent(a, b, EquivalenceOptions{false}));
}

// Conservation, compression, monotonicity and refinement on random documents.
TEST(Apt, InvariantsOnRandomDocuments) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        ProvDocument doc = generate_random(5 + seed, 0.5 + 0.1 * static_cast<double>(seed % 20), seed);
        std::size_t previous = 0;
        Summary coarser;
        for (std::size_t k = 0; k <= 5; ++k) {
            Summary s = apt(doc, k);
            EXPECT_EQ(s.total_node_weight(), doc.node_count());
            EXPECT_EQ(s.total_edge_count(), doc.edge_count());
            EXPECT_LE(s.types.size(), doc.node_count());
            EXPECT_GE(s.types.size(), previous);
            if (k > 0) {
                // Nodes sharing a level-k type shared a level-(k-1) type.
                std::map<std::size_t, std::size_t> parent;
                for (const auto& [node, type] : s.assignment) {
                    auto [it, fresh] = parent.emplace(type, coarser.assignment.at(node));
                    EXPECT_EQ(it->second, coarser.assignment.at(node));
                }
            }
            for (std::size_t i = 0; i < s.types.size(); ++i) {
                for (std::size_t j = i + 1; j < s.types.size(); ++j) {
                    EXPECT_NE(s.types[i].key, s.types[j].key);
                }
            }
            previous = s.types.size();
            coarser = std::move(s);
        }
    }
}

TEST(SummaryJson, DeterministicAndRoundTrips) {
    ProvDocument doc = generate_random(60, 2.0, 21);
    Summary s = apt(doc, 2);
    const std::string text = summary_to_json(s, true);
    EXPECT_EQ(text, summary_to_json(apt(doc, 2), true));
    Summary back = parse_summary(text);
    EXPECT_EQ(back, s);
    EXPECT_TRUE(summaries_equivalent(back, s));
}

TEST(SummaryJson, EmptySummary) {
    Summary s = apt(ProvDocument{}, 2);
    EXPECT_EQ(summary_to_json(s),
              "{\n  \"k\": 2,\n  \"direction\": \"forward\",\n  \"types\": [],\n"
              "  \"edges\": [],\n  \"roots\": []\n}\n");
}

TEST(SummaryJson, Errors) {
    EXPECT_THROW(parse_summary("nope"), ParseError);
    EXPECT_THROW(parse_summary(R"({"direction":"forward","types":[],"edges":[]})"), ParseError);
    EXPECT_THROW(parse_summary(R"({"k":0,"direction":"sideways","types":[],"edges":[]})"),
                 ParseError);
    EXPECT_THROW(parse_summary(R"({"k":0,"direction":"forward","types":[
        {"id":"t","signature":{"0":["Entity"]},"nodes":1}],
        "edges":[{"src":"t","dst":"u","label":"wdf","count":1}]})"),
                 ParseError);
    EXPECT_THROW(parse_summary(R"({"k":0,"direction":"forward","types":[
        {"id":"t","signature":{"0":["Entity"]},"nodes":1}],
        "edges":[{"src":"t","dst":"t","label":"derived","count":1}]})"),
                 ParseError);
    EXPECT_THROW(parse_summary(R"({"k":0,"direction":"forward","types":[
        {"id":"t","signature":{"3":["Entity"]},"nodes":1}],"edges":[]})"),
                 ParseError);
}

} // namespace
} // namespace provsum
