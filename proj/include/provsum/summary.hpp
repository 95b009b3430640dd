#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "provsum/prov_document.hpp"
#include "provsum/ptype.hpp"

namespace provsum {

struct SummaryType {
    std::string id;                // "t_0", ...
    RenderedSignature signature;   // canonical strings per level
    std::string key;               // signature_key(signature)
    std::uint64_t node_weight = 0; // Nodes(t)

    bool operator==(const SummaryType&) const = default;
};

// Endpoints index into Summary::types.
struct SummaryEdge {
    std::size_t src;
    std::size_t dst;
    RelationLabel label;
    std::uint64_t count; // Edges(src, dst, label)

    bool operator==(const SummaryEdge&) const = default;
};

/// APT(k) summary. Types are kept in id order, edges sorted by
/// (src, dst, label); roots are sorted type indices.
struct Summary {
    std::size_t k = 0;
    Direction direction = Direction::Forward;
    std::vector<SummaryType> types;
    std::vector<SummaryEdge> edges;
    std::map<std::string, std::size_t> assignment; // node id -> type index
    std::vector<std::size_t> roots;

    std::optional<std::size_t> find_type(std::string_view id) const;
    std::uint64_t total_node_weight() const;
    std::uint64_t total_edge_count() const;

    bool operator==(const Summary&) const = default;
};

struct NodeAggregation {
    std::vector<SummaryType> types;
    std::vector<std::size_t> assignment; // indexed by NodeIndex
};

/// Groups nodes by signature key. Type ids follow the lexicographic order of
/// the keys.
NodeAggregation aggregate_nodes(const Signatures& signatures);

std::vector<SummaryEdge> aggregate_edges(const ProvDocument& doc,
                                         const std::vector<std::size_t>& assignment);

Summary apt(const ProvDocument& doc, std::size_t k, Direction dir = Direction::Forward,
            std::size_t max_terms = default_max_terms);

struct EquivalenceOptions {
    // When false, node weights and edge counts are ignored.
    bool compare_weights = true;
};

/// Equality up to type naming: ids are replaced by signature keys before
/// comparing types, weights, edges, counts, roots, k and direction.
bool summaries_equivalent(const Summary& a, const Summary& b,
                          const EquivalenceOptions& options = {});

} // namespace provsum
