#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "provsum/prov_document.hpp"
#include "provsum/relation.hpp"

namespace provsum {

// Forward follows edges as stored (the node's past); Inverse walks them
// backwards (the node's future) and renders labels as "inv-<label>".
enum class Direction : std::uint8_t { Forward, Inverse };

std::string_view direction_name(Direction dir);
std::optional<Direction> direction_from_name(std::string_view name);

using TypeId = std::uint32_t;

inline constexpr std::size_t default_max_terms = 10'000'000;

/// Interned provenance type terms: Base(name) or label(inner). Equal terms
/// share one TypeId, so equality of ids is equality of canonical strings.
/// Not thread-safe; signature computation is single-threaded.
class TypeTable {
public:
    explicit TypeTable(std::size_t max_terms = default_max_terms) : max_terms_(max_terms) {}

    TypeId base(std::string_view name);
    TypeId apply(RelationLabel label, Direction dir, TypeId inner);

    bool is_base(TypeId id) const { return terms_[id].is_base; }
    std::size_t level(TypeId id) const { return terms_[id].level; }
    RelationLabel label(TypeId id) const { return terms_[id].label; }
    Direction direction(TypeId id) const { return terms_[id].dir; }
    TypeId inner(TypeId id) const { return terms_[id].inner; }

    /// Canonical rendering, e.g. "used(wat(Agent))".
    const std::string& render(TypeId id) const { return strings_[id]; }
    std::optional<TypeId> find(std::string_view canonical) const;

    std::size_t size() const { return terms_.size(); }
    std::size_t max_terms() const { return max_terms_; }

private:
    struct Term {
        bool is_base;
        RelationLabel label;
        Direction dir;
        TypeId inner;
        std::uint32_t level;
    };

    TypeId insert(Term term, std::string canonical);

    std::size_t max_terms_;
    std::vector<Term> terms_;
    std::vector<std::string> strings_;
    std::unordered_map<std::string, TypeId> by_string_;
    std::unordered_map<std::uint64_t, TypeId> by_structure_;
};

/// Rendered label of an application, "wdf" or "inv-wdf".
std::string applied_label_name(RelationLabel label, Direction dir);

// Sorted by TypeId, no duplicates.
using TypeSet = std::vector<TypeId>;

TypeSet level0_types(const ProvDocument& doc, NodeIndex node, TypeTable& table);
/// Throws InputError if the id is unknown.
TypeSet level0_types(const ProvDocument& doc, std::string_view node_id, TypeTable& table);
std::vector<TypeSet> level0_types(const ProvDocument& doc, TypeTable& table);

/// One step of the fixed point: for every edge x -l-> y (reversed under
/// Inverse), every type t of y at level i yields l(t) for x at level i+1.
std::vector<TypeSet> next_level(const ProvDocument& doc, const std::vector<TypeSet>& prev,
                                Direction dir, TypeTable& table);

// Level i holds the provenance types of length-i paths, i = 0..k.
struct Signature {
    std::vector<TypeSet> levels;
};

using RenderedSignature = std::vector<std::vector<std::string>>;

/// Canonical key of a rendered signature. Every level is present, terms in
/// each level are sorted; '\x1f' ends a term and '\x1e' ends a level.
std::string signature_key(const RenderedSignature& levels);

class Signatures {
public:
    Signatures(std::size_t k, Direction dir, TypeTable table, std::vector<Signature> per_node)
        : k_(k), dir_(dir), table_(std::move(table)), per_node_(std::move(per_node)) {}

    std::size_t k() const { return k_; }
    Direction direction() const { return dir_; }
    const TypeTable& table() const { return table_; }
    std::size_t node_count() const { return per_node_.size(); }

    const Signature& of(NodeIndex node) const { return per_node_[node]; }
    RenderedSignature rendered(NodeIndex node, std::size_t up_to_level) const;
    RenderedSignature rendered(NodeIndex node) const { return rendered(node, k_); }
    std::string key(NodeIndex node, std::size_t up_to_level) const;
    std::string key(NodeIndex node) const { return key(node, k_); }

private:
    std::size_t k_;
    Direction dir_;
    TypeTable table_;
    std::vector<Signature> per_node_;
};

/// Computes levels 0..k for every node. Throws ResourceLimitError when the
/// term table would exceed max_terms.
Signatures compute_signatures(const ProvDocument& doc, std::size_t k, Direction dir,
                              std::size_t max_terms = default_max_terms);

} // namespace provsum
