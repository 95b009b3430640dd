#include "provsum/prov_document.hpp"

#include <algorithm>

#include "provsum/errors.hpp"

namespace provsum {

ProvDocument::ProvDocument() : out_offsets_{0} {}

std::optional<NodeIndex> ProvDocument::find(std::string_view id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

NodeIndex ProvDocument::index_of(std::string_view id) const {
    if (auto found = find(id)) return *found;
    throw InputError("unknown node id '" + std::string(id) + "'");
}

std::span<const EdgeRef> ProvDocument::out_edges(NodeIndex index) const {
    return std::span<const EdgeRef>(edges_).subspan(
        out_offsets_[index], out_offsets_[index + 1] - out_offsets_[index]);
}

std::size_t ProvDocument::max_in_degree() const {
    if (in_degree_.empty()) return 0;
    return *std::max_element(in_degree_.begin(), in_degree_.end());
}

std::vector<NodeIndex> ProvDocument::roots() const {
    std::vector<NodeIndex> result;
    if (declared_roots_) {
        for (const auto& id : *declared_roots_) result.push_back(index_of(id));
        std::sort(result.begin(), result.end());
        result.erase(std::unique(result.begin(), result.end()), result.end());
        return result;
    }
    for (NodeIndex i = 0; i < nodes_.size(); ++i) {
        if (in_degree_[i] == 0) result.push_back(i);
    }
    return result;
}

ProvEdge ProvDocument::named(const EdgeRef& edge) const {
    return ProvEdge{nodes_[edge.src].id, nodes_[edge.dst].id, edge.label};
}

bool ProvDocument::operator==(const ProvDocument& other) const {
    return nodes_ == other.nodes_ && edges_ == other.edges_ &&
           declared_roots_ == other.declared_roots_;
}

ProvDocumentBuilder::ProvDocumentBuilder(const ProvDocument& doc) {
    for (const auto& node : doc.nodes()) nodes_.emplace(node.id, node);
    for (const auto& edge : doc.edges()) edges_.insert(doc.named(edge));
    declared_roots_ = doc.declared_roots();
}

ProvDocumentBuilder& ProvDocumentBuilder::add_node(const std::string& id) {
    if (id.empty()) throw InputError("node id must be non-empty");
    if (nodes_.find(id) == nodes_.end()) nodes_.emplace(id, ProvNode{id, {}, {}});
    return *this;
}

ProvDocumentBuilder& ProvDocumentBuilder::add_core_type(const std::string& id, CoreKind kind) {
    add_node(id);
    nodes_.find(id)->second.core_types.insert(kind);
    return *this;
}

ProvDocumentBuilder& ProvDocumentBuilder::add_app_type(const std::string& id,
                                                       const std::string& type_name) {
    if (!is_valid_type_name(type_name)) {
        throw InputError("invalid type name '" + type_name + "' on node '" + id + "'");
    }
    add_node(id);
    nodes_.find(id)->second.app_types.insert(type_name);
    return *this;
}

ProvDocumentBuilder& ProvDocumentBuilder::add_edge(const std::string& src,
                                                   const std::string& dst,
                                                   RelationLabel label) {
    edges_.insert(ProvEdge{src, dst, label});
    return *this;
}

ProvDocumentBuilder& ProvDocumentBuilder::set_declared_roots(std::vector<std::string> roots) {
    declared_roots_ = std::move(roots);
    return *this;
}

ProvDocument ProvDocumentBuilder::build() const {
    ProvDocument doc;
    doc.nodes_.reserve(nodes_.size());
    for (const auto& [id, node] : nodes_) {
        doc.index_.emplace(id, static_cast<NodeIndex>(doc.nodes_.size()));
        doc.nodes_.push_back(node);
    }

    doc.edges_.reserve(edges_.size());
    for (const auto& edge : edges_) {
        auto src = doc.find(edge.src);
        auto dst = doc.find(edge.dst);
        if (!src || !dst) {
            const std::string& missing = src ? edge.dst : edge.src;
            throw InputError("edge " + std::string(label_name(edge.label)) +
                             " references unknown node '" + missing + "'");
        }
        doc.edges_.push_back(EdgeRef{*src, *dst, edge.label});
    }
    // std::set orders by id strings, which is the node index order.
    std::sort(doc.edges_.begin(), doc.edges_.end());

    doc.out_offsets_.assign(doc.nodes_.size() + 1, 0);
    doc.in_degree_.assign(doc.nodes_.size(), 0);
    for (const auto& edge : doc.edges_) {
        ++doc.out_offsets_[edge.src + 1];
        ++doc.in_degree_[edge.dst];
    }
    for (std::size_t i = 1; i < doc.out_offsets_.size(); ++i) {
        doc.out_offsets_[i] += doc.out_offsets_[i - 1];
    }

    if (declared_roots_) {
        std::vector<std::string> roots = *declared_roots_;
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        for (const auto& root : roots) {
            if (!doc.find(root)) throw InputError("declared root '" + root + "' is not a node");
        }
        doc.declared_roots_ = std::move(roots);
    }
    return doc;
}

bool is_valid_type_name(std::string_view name) {
    if (name.empty()) return false;
    return std::none_of(name.begin(), name.end(), [](char c) {
        return c == '(' || c == ')' || static_cast<unsigned char>(c) < 0x20;
    });
}

InferenceResult infer_core_types(const ProvDocument& doc) {
    std::vector<std::set<CoreKind>> evidence(doc.node_count());
    for (const auto& edge : doc.edges()) {
        const auto& info = relation_info(edge.label);
        evidence[edge.src].insert(info.src_kind);
        evidence[edge.dst].insert(info.dst_kind);
    }

    InferenceResult result;
    ProvDocumentBuilder builder(doc);
    for (NodeIndex i = 0; i < doc.node_count(); ++i) {
        const ProvNode& node = doc.node(i);
        const auto& implied = evidence[i];
        if (!node.core_types.empty()) {
            for (CoreKind kind : implied) {
                if (node.core_types.count(kind) == 0) {
                    result.warnings.push_back(
                        {node.id, "declared core type conflicts with inferred " +
                                      std::string(core_kind_name(kind))});
                }
            }
            continue;
        }
        if (implied.empty()) {
            result.warnings.push_back({node.id, "no core type declared or inferable"});
            continue;
        }
        if (implied.size() > 1) {
            std::string kinds;
            for (CoreKind kind : implied) {
                if (!kinds.empty()) kinds += ", ";
                kinds += core_kind_name(kind);
            }
            result.warnings.push_back({node.id, "contradictory inferred core types: " + kinds});
        }
        for (CoreKind kind : implied) builder.add_core_type(node.id, kind);
    }
    result.document = builder.build();
    return result;
}

} // namespace provsum
