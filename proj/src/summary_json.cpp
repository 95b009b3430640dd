#include "provsum/summary_json.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "provsum/errors.hpp"

namespace provsum {

using nlohmann::json;
using nlohmann::ordered_json;

std::string summary_to_json(const Summary& summary, bool include_assignment) {
    ordered_json out;
    out["k"] = summary.k;
    out["direction"] = std::string(direction_name(summary.direction));
    ordered_json types = ordered_json::array();
    for (const auto& type : summary.types) {
        ordered_json signature = ordered_json::object();
        for (std::size_t level = 0; level < type.signature.size(); ++level) {
            signature[std::to_string(level)] = type.signature[level];
        }
        types.push_back({{"id", type.id}, {"signature", signature}, {"nodes", type.node_weight}});
    }
    out["types"] = std::move(types);
    ordered_json edges = ordered_json::array();
    for (const auto& edge : summary.edges) {
        edges.push_back({{"src", summary.types[edge.src].id},
                         {"dst", summary.types[edge.dst].id},
                         {"label", std::string(label_name(edge.label))},
                         {"count", edge.count}});
    }
    out["edges"] = std::move(edges);
    ordered_json roots = ordered_json::array();
    for (std::size_t root : summary.roots) roots.push_back(summary.types[root].id);
    out["roots"] = std::move(roots);
    if (include_assignment) {
        ordered_json assignment = ordered_json::object();
        for (const auto& [node, type] : summary.assignment) {
            assignment[node] = summary.types[type].id;
        }
        out["assignment"] = std::move(assignment);
    }
    return out.dump(2) + "\n";
}

namespace {

template <typename T>
T require(const json& object, const char* field, const char* context) {
    auto it = object.find(field);
    if (it == object.end()) {
        throw ParseError(std::string(context) + " is missing field '" + field + "'");
    }
    try {
        return it->get<T>();
    } catch (const json::exception&) {
        throw ParseError(std::string(context) + " has an invalid '" + field + "' field");
    }
}

using TypeIndex = std::map<std::string, std::size_t, std::less<>>;

std::size_t type_ref(const TypeIndex& index, const std::string& id, const char* context) {
    auto it = index.find(id);
    if (it == index.end()) {
        throw ParseError(std::string(context) + " references unknown type '" + id + "'");
    }
    return it->second;
}

} // namespace

Summary parse_summary(std::string_view text) {
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed summary JSON: ") + e.what());
    }
    if (!root.is_object()) throw ParseError("summary must be a JSON object");

    Summary summary;
    auto k = require<long long>(root, "k", "summary");
    if (k < 0) throw ParseError("summary k must be non-negative");
    summary.k = static_cast<std::size_t>(k);
    auto dir = direction_from_name(require<std::string>(root, "direction", "summary"));
    if (!dir) throw ParseError("summary direction must be 'forward' or 'inverse'");
    summary.direction = *dir;

    TypeIndex ids;
    const json types = require<json>(root, "types", "summary");
    const json edges = require<json>(root, "edges", "summary");
    if (!types.is_array() || !edges.is_array()) {
        throw ParseError("summary types and edges must be arrays");
    }
    for (const auto& item : types) {
        if (!item.is_object()) throw ParseError("summary type must be an object");
        SummaryType type;
        type.id = require<std::string>(item, "id", "summary type");
        if (!ids.emplace(type.id, summary.types.size()).second) {
            throw ParseError("duplicate summary type '" + type.id + "'");
        }
        auto weight = require<long long>(item, "nodes", "summary type");
        if (weight < 1) throw ParseError("summary type '" + type.id + "' needs a positive weight");
        type.node_weight = static_cast<std::uint64_t>(weight);

        const json signature = require<json>(item, "signature", "summary type");
        if (!signature.is_object()) throw ParseError("signature of '" + type.id + "' must be an object");
        type.signature.assign(summary.k + 1, {});
        for (const auto& [level_name, terms] : signature.items()) {
            std::size_t level = 0;
            try {
                std::size_t used = 0;
                level = std::stoul(level_name, &used);
                if (used != level_name.size()) throw std::invalid_argument(level_name);
            } catch (const std::exception&) {
                throw ParseError("signature of '" + type.id + "' has a non-numeric level");
            }
            if (level > summary.k) throw ParseError("signature level exceeds summary k");
            try {
                type.signature[level] = terms.get<std::vector<std::string>>();
            } catch (const json::exception&) {
                throw ParseError("signature level of '" + type.id + "' must be a string array");
            }
            std::sort(type.signature[level].begin(), type.signature[level].end());
        }
        type.key = signature_key(type.signature);
        summary.types.push_back(std::move(type));
    }

    std::set<std::tuple<std::size_t, std::size_t, RelationLabel>> seen;
    for (const auto& item : edges) {
        if (!item.is_object()) throw ParseError("summary edge must be an object");
        SummaryEdge edge{};
        edge.src = type_ref(ids, require<std::string>(item, "src", "summary edge"), "summary edge");
        edge.dst = type_ref(ids, require<std::string>(item, "dst", "summary edge"), "summary edge");
        auto label = label_from_name(require<std::string>(item, "label", "summary edge"));
        if (!label) throw ParseError("summary edge has an unknown label");
        edge.label = *label;
        auto count = require<long long>(item, "count", "summary edge");
        if (count < 1) throw ParseError("summary edge needs a positive count");
        edge.count = static_cast<std::uint64_t>(count);
        if (!seen.insert({edge.src, edge.dst, edge.label}).second) {
            throw ParseError("duplicate summary edge");
        }
        summary.edges.push_back(edge);
    }
    std::sort(summary.edges.begin(), summary.edges.end(), [](const auto& a, const auto& b) {
        return std::tie(a.src, a.dst, a.label) < std::tie(b.src, b.dst, b.label);
    });

    if (auto roots = root.find("roots"); roots != root.end()) {
        std::set<std::size_t> indices;
        try {
            for (const auto& id : roots->get<std::vector<std::string>>()) {
                indices.insert(type_ref(ids, id, "summary root"));
            }
        } catch (const json::exception&) {
            throw ParseError("summary roots must be a string array");
        }
        summary.roots.assign(indices.begin(), indices.end());
    }

    if (auto assignment = root.find("assignment"); assignment != root.end()) {
        if (!assignment->is_object()) throw ParseError("summary assignment must be an object");
        for (const auto& [node, type] : assignment->items()) {
            if (!type.is_string()) throw ParseError("summary assignment values must be type ids");
            summary.assignment.emplace(node,
                                       type_ref(ids, type.get<std::string>(), "assignment"));
        }
    }
    return summary;
}

Summary load_summary(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_summary(buffer.str());
}

} // namespace provsum
