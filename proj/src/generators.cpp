#include "provsum/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace provsum {

namespace {

// std distributions are implementation-defined; mt19937_64 output is not.
std::size_t draw(std::mt19937_64& rng, std::size_t bound) {
    return static_cast<std::size_t>(rng() % bound);
}

std::vector<std::size_t> seeded_permutation(std::size_t n, std::uint64_t seed) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::mt19937_64 rng(seed);
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[draw(rng, i)]);
    return perm;
}

struct MotifIds {
    std::string output;
    std::string activity;
    std::string input;
};

MotifIds motif_ids(std::size_t number) {
    const std::string suffix = std::to_string(number);
    return {"ex:output" + suffix, "ex:run" + suffix, "ex:input" + suffix};
}

ProvDocumentBuilder pattern_builder(std::size_t repeats, std::uint64_t seed,
                                    std::vector<MotifIds>& copies) {
    if (repeats < 1) throw std::invalid_argument("pattern graph needs at least one repeat");
    const std::string agent = "ex:curator";
    ProvDocumentBuilder builder;
    builder.add_core_type(agent, CoreKind::Agent);
    for (std::size_t number : seeded_permutation(repeats, seed)) {
        MotifIds ids = motif_ids(number);
        builder.add_core_type(ids.output, CoreKind::Entity)
            .add_core_type(ids.activity, CoreKind::Activity)
            .add_core_type(ids.input, CoreKind::Entity)
            .add_edge(ids.output, ids.activity, RelationLabel::wgb)
            .add_edge(ids.activity, ids.input, RelationLabel::used)
            .add_edge(ids.activity, agent, RelationLabel::waw)
            .add_edge(ids.output, agent, RelationLabel::wat);
        copies.push_back(std::move(ids));
    }
    return builder;
}

} // namespace

ProvDocument generate_chain(std::size_t n) {
    if (n < 1) throw std::invalid_argument("chain needs at least one node");
    ProvDocumentBuilder builder;
    for (std::size_t i = 0; i < n; ++i) {
        builder.add_core_type("ex:e" + std::to_string(i), CoreKind::Entity);
        if (i > 0) {
            builder.add_edge("ex:e" + std::to_string(i), "ex:e" + std::to_string(i - 1),
                             RelationLabel::wdf);
        }
    }
    return builder.build();
}

ProvDocument generate_pattern_graph(std::size_t repeats, std::uint64_t seed) {
    std::vector<MotifIds> copies;
    return pattern_builder(repeats, seed, copies).build();
}

AnomalousPatternGraph generate_pattern_graph_with_anomaly(std::size_t repeats, std::uint64_t seed) {
    if (repeats < 2) throw std::invalid_argument("anomaly injection needs at least two repeats");
    std::vector<MotifIds> copies;
    ProvDocumentBuilder builder = pattern_builder(repeats, seed, copies);
    ProvEdge injected{copies[0].activity, copies[1].output, RelationLabel::used};
    builder.add_edge(injected.src, injected.dst, injected.label);
    return {builder.build(), injected};
}

ProvDocument generate_random(std::size_t n, double edge_density, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random document needs at least one node");
    if (!(edge_density >= 0.0) || !std::isfinite(edge_density)) {
        throw std::invalid_argument("edge density must be a finite non-negative number");
    }
    std::mt19937_64 rng(seed);
    ProvDocumentBuilder builder;
    std::array<std::vector<std::string>, 3> by_kind;
    static const std::array<std::array<const char*, 2>, 3> app_types = {{
        {"ex:Document", "ex:Dataset"},
        {"ex:Run", "ex:Review"},
        {"ex:Person", "ex:Software"},
    }};

    for (std::size_t i = 0; i < n; ++i) {
        const std::string id = "ex:n" + std::to_string(i);
        const std::size_t roll = draw(rng, 10);
        const CoreKind kind = roll < 5 ? CoreKind::Entity
                              : roll < 8 ? CoreKind::Activity
                                         : CoreKind::Agent;
        builder.add_core_type(id, kind);
        const auto k = static_cast<std::size_t>(kind);
        if (draw(rng, 4) == 0) builder.add_app_type(id, app_types[k][draw(rng, 2)]);
        by_kind[k].push_back(id);
    }

    const auto wanted = static_cast<std::size_t>(std::llround(edge_density * static_cast<double>(n)));
    std::set<ProvEdge> edges;
    for (std::size_t attempt = 0; edges.size() < wanted && attempt < 20 * wanted + 100; ++attempt) {
        const auto& info = relation_info(all_relation_labels[draw(rng, relation_label_count)]);
        const auto& sources = by_kind[static_cast<std::size_t>(info.src_kind)];
        const auto& targets = by_kind[static_cast<std::size_t>(info.dst_kind)];
        if (sources.empty() || targets.empty()) continue;
        const std::string& src = sources[draw(rng, sources.size())];
        const std::string& dst = targets[draw(rng, targets.size())];
        if (src == dst) continue;
        edges.insert(ProvEdge{src, dst, info.label});
    }
    for (const auto& edge : edges) builder.add_edge(edge.src, edge.dst, edge.label);
    return builder.build();
}

} // namespace provsum
