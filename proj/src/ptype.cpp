#include "provsum/ptype.hpp"

#include <algorithm>

#include "provsum/errors.hpp"

namespace provsum {

std::string_view direction_name(Direction dir) {
    return dir == Direction::Forward ? "forward" : "inverse";
}

std::optional<Direction> direction_from_name(std::string_view name) {
    if (name == "forward") return Direction::Forward;
    if (name == "inverse") return Direction::Inverse;
    return std::nullopt;
}

std::string applied_label_name(RelationLabel label, Direction dir) {
    std::string name = dir == Direction::Inverse ? "inv-" : "";
    name += label_name(label);
    return name;
}

TypeId TypeTable::insert(Term term, std::string canonical) {
    if (terms_.size() >= max_terms_) {
        throw ResourceLimitError("provenance type table exceeded " + std::to_string(max_terms_) +
                                 " terms");
    }
    auto id = static_cast<TypeId>(terms_.size());
    terms_.push_back(term);
    by_string_.emplace(canonical, id);
    strings_.push_back(std::move(canonical));
    return id;
}

TypeId TypeTable::base(std::string_view name) {
    if (auto found = find(name)) return *found;
    return insert(Term{true, RelationLabel::used, Direction::Forward, 0, 0}, std::string(name));
}

TypeId TypeTable::apply(RelationLabel label, Direction dir, TypeId inner) {
    const std::uint64_t structure = (static_cast<std::uint64_t>(inner) << 8) |
                                    (static_cast<std::uint64_t>(label) << 1) |
                                    static_cast<std::uint64_t>(dir);
    if (auto it = by_structure_.find(structure); it != by_structure_.end()) return it->second;

    std::string canonical = applied_label_name(label, dir);
    canonical.reserve(canonical.size() + strings_[inner].size() + 2);
    canonical += '(';
    canonical += strings_[inner];
    canonical += ')';
    TypeId id = insert(Term{false, label, dir, inner, terms_[inner].level + 1},
                       std::move(canonical));
    by_structure_.emplace(structure, id);
    return id;
}

std::optional<TypeId> TypeTable::find(std::string_view canonical) const {
    auto it = by_string_.find(std::string(canonical));
    if (it == by_string_.end()) return std::nullopt;
    return it->second;
}

TypeSet level0_types(const ProvDocument& doc, NodeIndex node, TypeTable& table) {
    const ProvNode& n = doc.node(node);
    TypeSet result;
    for (CoreKind kind : n.core_types) result.push_back(table.base(core_kind_name(kind)));
    for (const auto& name : n.app_types) result.push_back(table.base(name));
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

TypeSet level0_types(const ProvDocument& doc, std::string_view node_id, TypeTable& table) {
    return level0_types(doc, doc.index_of(node_id), table);
}

std::vector<TypeSet> level0_types(const ProvDocument& doc, TypeTable& table) {
    std::vector<TypeSet> result;
    result.reserve(doc.node_count());
    for (NodeIndex i = 0; i < doc.node_count(); ++i) result.push_back(level0_types(doc, i, table));
    return result;
}

std::vector<TypeSet> next_level(const ProvDocument& doc, const std::vector<TypeSet>& prev,
                                Direction dir, TypeTable& table) {
    std::vector<TypeSet> result(doc.node_count());
    for (const auto& edge : doc.edges()) {
        NodeIndex from = dir == Direction::Forward ? edge.src : edge.dst;
        NodeIndex to = dir == Direction::Forward ? edge.dst : edge.src;
        for (TypeId inner : prev[to]) result[from].push_back(table.apply(edge.label, dir, inner));
    }
    for (auto& types : result) {
        std::sort(types.begin(), types.end());
        types.erase(std::unique(types.begin(), types.end()), types.end());
    }
    return result;
}

std::string signature_key(const RenderedSignature& levels) {
    std::string key;
    for (const auto& level : levels) {
        for (const auto& term : level) {
            key += term;
            key += '\x1f';
        }
        key += '\x1e';
    }
    return key;
}

RenderedSignature Signatures::rendered(NodeIndex node, std::size_t up_to_level) const {
    const auto& levels = per_node_[node].levels;
    RenderedSignature out;
    for (std::size_t i = 0; i <= up_to_level && i < levels.size(); ++i) {
        std::vector<std::string> terms;
        terms.reserve(levels[i].size());
        for (TypeId id : levels[i]) terms.push_back(table_.render(id));
        std::sort(terms.begin(), terms.end());
        out.push_back(std::move(terms));
    }
    return out;
}

std::string Signatures::key(NodeIndex node, std::size_t up_to_level) const {
    return signature_key(rendered(node, up_to_level));
}

Signatures compute_signatures(const ProvDocument& doc, std::size_t k, Direction dir,
                              std::size_t max_terms) {
    TypeTable table(max_terms);
    std::vector<Signature> per_node(doc.node_count());
    std::vector<TypeSet> current = level0_types(doc, table);
    for (std::size_t level = 0;; ++level) {
        for (NodeIndex i = 0; i < doc.node_count(); ++i) per_node[i].levels.push_back(current[i]);
        if (level == k) break;
        current = next_level(doc, current, dir, table);
    }
    return Signatures(k, dir, std::move(table), std::move(per_node));
}

} // namespace provsum
