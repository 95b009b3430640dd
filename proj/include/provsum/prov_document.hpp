#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "provsum/relation.hpp"

namespace provsum {

using NodeIndex = std::uint32_t;

struct ProvNode {
    std::string id;
    std::set<CoreKind> core_types;
    std::set<std::string> app_types;

    bool operator==(const ProvNode&) const = default;
};

// An edge named by node ids, as it appears in files and reports.
struct ProvEdge {
    std::string src;
    std::string dst;
    RelationLabel label;

    auto operator<=>(const ProvEdge&) const = default;
};

// An edge over node indices of a particular document.
struct EdgeRef {
    NodeIndex src;
    NodeIndex dst;
    RelationLabel label;

    auto operator<=>(const EdgeRef&) const = default;
};

/// Instance provenance graph. Immutable once built; nodes are ordered by id
/// and edges by (src, dst, label), so indices are stable for equal documents.
class ProvDocument {
public:
    ProvDocument();

    std::span<const ProvNode> nodes() const { return nodes_; }
    std::span<const EdgeRef> edges() const { return edges_; }
    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const ProvNode& node(NodeIndex index) const { return nodes_[index]; }
    std::optional<NodeIndex> find(std::string_view id) const;
    /// Throws InputError for an unknown id.
    NodeIndex index_of(std::string_view id) const;

    /// Outgoing edges of a node, contiguous and sorted by (dst, label).
    std::span<const EdgeRef> out_edges(NodeIndex index) const;
    std::size_t in_degree(NodeIndex index) const { return in_degree_[index]; }
    std::size_t max_in_degree() const;

    const std::optional<std::vector<std::string>>& declared_roots() const {
        return declared_roots_;
    }
    /// Declared roots if present, otherwise nodes with no incoming edge.
    std::vector<NodeIndex> roots() const;

    ProvEdge named(const EdgeRef& edge) const;

    bool operator==(const ProvDocument& other) const;

private:
    friend class ProvDocumentBuilder;

    std::vector<ProvNode> nodes_;
    std::vector<EdgeRef> edges_;
    std::vector<std::size_t> out_offsets_;
    std::vector<std::uint32_t> in_degree_;
    std::map<std::string, NodeIndex, std::less<>> index_;
    std::optional<std::vector<std::string>> declared_roots_;
};

/// Accumulates nodes and edges with set semantics, then freezes them into a
/// ProvDocument. Edge endpoints and declared roots are validated by build().
class ProvDocumentBuilder {
public:
    ProvDocumentBuilder() = default;
    explicit ProvDocumentBuilder(const ProvDocument& doc);

    ProvDocumentBuilder& add_node(const std::string& id);
    ProvDocumentBuilder& add_core_type(const std::string& id, CoreKind kind);
    ProvDocumentBuilder& add_app_type(const std::string& id, const std::string& type_name);
    ProvDocumentBuilder& add_edge(const std::string& src, const std::string& dst,
                                  RelationLabel label);
    ProvDocumentBuilder& set_declared_roots(std::vector<std::string> roots);

    bool has_node(std::string_view id) const { return nodes_.find(id) != nodes_.end(); }

    ProvDocument build() const;

private:
    std::map<std::string, ProvNode, std::less<>> nodes_;
    std::set<ProvEdge> edges_;
    std::optional<std::vector<std::string>> declared_roots_;
};

/// True when a user-defined type name can be rendered unambiguously inside a
/// type term (no parentheses, no control characters, non-empty).
bool is_valid_type_name(std::string_view name);

struct InferenceWarning {
    std::string node;
    std::string message;

    bool operator==(const InferenceWarning&) const = default;
};

struct InferenceResult {
    ProvDocument document;
    std::vector<InferenceWarning> warnings;
};

/// Adds the core kind implied by each edge's label signature to its endpoints.
/// Declared kinds win over conflicting evidence; conflicting evidence on an
/// undeclared node keeps every inferred kind. Both situations warn, as do
/// nodes that end up without any base type.
InferenceResult infer_core_types(const ProvDocument& doc);

} // namespace provsum
