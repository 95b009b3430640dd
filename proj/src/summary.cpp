#include "provsum/summary.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

namespace provsum {

std::optional<std::size_t> Summary::find_type(std::string_view id) const {
    for (std::size_t i = 0; i < types.size(); ++i) {
        if (types[i].id == id) return i;
    }
    return std::nullopt;
}

std::uint64_t Summary::total_node_weight() const {
    return std::accumulate(types.begin(), types.end(), std::uint64_t{0},
                           [](std::uint64_t acc, const SummaryType& t) { return acc + t.node_weight; });
}

std::uint64_t Summary::total_edge_count() const {
    return std::accumulate(edges.begin(), edges.end(), std::uint64_t{0},
                           [](std::uint64_t acc, const SummaryEdge& e) { return acc + e.count; });
}

NodeAggregation aggregate_nodes(const Signatures& signatures) {
    const std::size_t n = signatures.node_count();
    std::vector<std::string> keys(n);
    for (NodeIndex i = 0; i < n; ++i) keys[i] = signatures.key(i);

    std::vector<NodeIndex> order(n);
    std::iota(order.begin(), order.end(), NodeIndex{0});
    std::sort(order.begin(), order.end(), [&](NodeIndex a, NodeIndex b) {
        return std::tie(keys[a], a) < std::tie(keys[b], b);
    });

    NodeAggregation result;
    result.assignment.assign(n, 0);
    for (std::size_t pos = 0; pos < n; ++pos) {
        NodeIndex node = order[pos];
        if (pos == 0 || keys[node] != keys[order[pos - 1]]) {
            SummaryType type;
            type.id = "t_" + std::to_string(result.types.size());
            type.signature = signatures.rendered(node);
            type.key = keys[node];
            result.types.push_back(std::move(type));
        }
        result.types.back().node_weight += 1;
        result.assignment[node] = result.types.size() - 1;
    }
    return result;
}

std::vector<SummaryEdge> aggregate_edges(const ProvDocument& doc,
                                         const std::vector<std::size_t>& assignment) {
    std::map<std::tuple<std::size_t, std::size_t, RelationLabel>, std::uint64_t> counts;
    for (const auto& edge : doc.edges()) {
        ++counts[{assignment[edge.src], assignment[edge.dst], edge.label}];
    }
    std::vector<SummaryEdge> edges;
    edges.reserve(counts.size());
    for (const auto& [triple, count] : counts) {
        const auto& [src, dst, label] = triple;
        edges.push_back(SummaryEdge{src, dst, label, count});
    }
    return edges;
}

Summary apt(const ProvDocument& doc, std::size_t k, Direction dir, std::size_t max_terms) {
    Signatures signatures = compute_signatures(doc, k, dir, max_terms);
    NodeAggregation nodes = aggregate_nodes(signatures);

    Summary summary;
    summary.k = k;
    summary.direction = dir;
    summary.edges = aggregate_edges(doc, nodes.assignment);
    for (NodeIndex i = 0; i < doc.node_count(); ++i) {
        summary.assignment.emplace(doc.node(i).id, nodes.assignment[i]);
    }
    std::set<std::size_t> roots;
    for (NodeIndex root : doc.roots()) roots.insert(nodes.assignment[root]);
    summary.roots.assign(roots.begin(), roots.end());
    summary.types = std::move(nodes.types);
    return summary;
}

namespace {

struct CanonicalSummary {
    std::size_t k;
    Direction direction;
    std::vector<std::pair<std::string, std::uint64_t>> types;
    std::vector<std::tuple<std::string, std::string, RelationLabel, std::uint64_t>> edges;
    std::vector<std::string> roots;

    bool operator==(const CanonicalSummary&) const = default;
};

CanonicalSummary canonicalize(const Summary& s, bool with_weights) {
    CanonicalSummary c{s.k, s.direction, {}, {}, {}};
    for (const auto& t : s.types) c.types.emplace_back(t.key, with_weights ? t.node_weight : 0);
    for (const auto& e : s.edges) {
        c.edges.emplace_back(s.types[e.src].key, s.types[e.dst].key, e.label,
                             with_weights ? e.count : 0);
    }
    for (std::size_t r : s.roots) c.roots.push_back(s.types[r].key);
    std::sort(c.types.begin(), c.types.end());
    std::sort(c.edges.begin(), c.edges.end());
    std::sort(c.roots.begin(), c.roots.end());
    c.roots.erase(std::unique(c.roots.begin(), c.roots.end()), c.roots.end());
    return c;
}

} // namespace

bool summaries_equivalent(const Summary& a, const Summary& b, const EquivalenceOptions& options) {
    return canonicalize(a, options.compare_weights) == canonicalize(b, options.compare_weights);
}

} // namespace provsum
