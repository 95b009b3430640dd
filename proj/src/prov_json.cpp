#include "provsum/prov_json.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "provsum/errors.hpp"

namespace provsum {

namespace {

using nlohmann::json;

void collect_type_values(const json& value, const std::string& node_id,
                         std::vector<std::string>& out) {
    if (value.is_string()) {
        out.push_back(value.get<std::string>());
    } else if (value.is_object() && value.contains("$") && value["$"].is_string()) {
        // {"$": "ex:Vote", "type": "prov:QUALIFIED_NAME"}
        out.push_back(value["$"].get<std::string>());
    } else if (value.is_array()) {
        for (const auto& item : value) {
            if (item.is_array()) throw ParseError("nested prov:type list on '" + node_id + "'");
            collect_type_values(item, node_id, out);
        }
    } else {
        throw ParseError("unsupported prov:type value on '" + node_id + "'");
    }
}

std::optional<CoreKind> section_kind(std::string_view key) {
    if (key == "entity") return CoreKind::Entity;
    if (key == "activity") return CoreKind::Activity;
    if (key == "agent") return CoreKind::Agent;
    return std::nullopt;
}

void read_node_section(const json& section, CoreKind kind, ProvDocumentBuilder& builder) {
    if (!section.is_object()) {
        throw ParseError("section '" + std::string(core_kind_name(kind)) + "' must be an object");
    }
    for (const auto& [id, attributes] : section.items()) {
        if (id.empty()) throw ParseError("empty node id");
        builder.add_core_type(id, kind);
        if (attributes.is_null()) continue;
        if (!attributes.is_object()) throw ParseError("attributes of '" + id + "' must be an object");
        auto type_attr = attributes.find("prov:type");
        if (type_attr == attributes.end()) continue;
        std::vector<std::string> names;
        collect_type_values(*type_attr, id, names);
        for (const auto& name : names) {
            if (!is_valid_type_name(name)) {
                throw ParseError("invalid prov:type '" + name + "' on '" + id + "'");
            }
            builder.add_app_type(id, name);
        }
    }
}

std::string endpoint(const json& record, std::string_view field, const std::string& record_id,
                     const RelationInfo& info) {
    auto it = record.find(std::string(field));
    if (it == record.end()) {
        throw ParseError(std::string(info.section_name) + " record '" + record_id +
                         "' is missing endpoint " + std::string(field));
    }
    if (!it->is_string() || it->get<std::string>().empty()) {
        throw ParseError(std::string(info.section_name) + " record '" + record_id +
                         "' has a non-string endpoint " + std::string(field));
    }
    return it->get<std::string>();
}

} // namespace

ProvDocument parse_document(std::string_view text, const ParseOptions& options) {
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!root.is_object()) throw ParseError("PROV-JSON document must be an object");

    ProvDocumentBuilder builder;
    std::vector<std::pair<const RelationInfo*, const json*>> relations;

    for (const auto& [key, section] : root.items()) {
        if (key == "prefix") continue;
        if (key == "roots") continue;
        if (auto kind = section_kind(key)) {
            read_node_section(section, *kind, builder);
            continue;
        }
        auto label = label_from_section(key);
        if (!label) throw ParseError("unknown section '" + key + "'");
        if (!section.is_object()) throw ParseError("section '" + key + "' must be an object");
        relations.emplace_back(&relation_info(*label), &section);
    }

    for (const auto& [info, section] : relations) {
        for (const auto& [record_id, record] : section->items()) {
            if (!record.is_object()) {
                throw ParseError(std::string(info->section_name) + " record '" + record_id +
                                 "' must be an object");
            }
            std::string src = endpoint(record, info->src_field, record_id, *info);
            std::string dst = endpoint(record, info->dst_field, record_id, *info);
            for (const auto& id : {src, dst}) {
                if (builder.has_node(id)) continue;
                if (!options.allow_undeclared_nodes) {
                    throw ParseError(std::string(info->section_name) + " record '" + record_id +
                                     "' references undeclared node '" + id + "'");
                }
                builder.add_node(id);
            }
            builder.add_edge(src, dst, info->label);
        }
    }

    if (auto roots = root.find("roots"); roots != root.end()) {
        if (!roots->is_array()) throw ParseError("'roots' must be an array of node ids");
        std::vector<std::string> ids;
        for (const auto& id : *roots) {
            if (!id.is_string()) throw ParseError("'roots' must be an array of node ids");
            ids.push_back(id.get<std::string>());
        }
        builder.set_declared_roots(std::move(ids));
    }

    try {
        return builder.build();
    } catch (const ParseError&) {
        throw;
    } catch (const InputError& e) {
        throw ParseError(e.what());
    }
}

ProvDocument parse_document(std::istream& in, const ParseOptions& options) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_document(buffer.str(), options);
}

ProvDocument load_document(const std::string& path, const ParseOptions& options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_document(in, options);
}

std::string write_document(const ProvDocument& doc) {
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    const std::pair<const char*, CoreKind> sections[] = {
        {"entity", CoreKind::Entity}, {"activity", CoreKind::Activity}, {"agent", CoreKind::Agent}};
    for (const auto& node : doc.nodes()) {
        if (node.core_types.empty()) {
            throw InputError("node '" + node.id + "' has no core type and cannot be written");
        }
    }
    for (const auto& [section, kind] : sections) {
        nlohmann::ordered_json entries = nlohmann::ordered_json::object();
        for (const auto& node : doc.nodes()) {
            if (node.core_types.count(kind) == 0) continue;
            nlohmann::ordered_json attributes = nlohmann::ordered_json::object();
            // App types ride on the first section the node appears in.
            if (!node.app_types.empty() && *node.core_types.begin() == kind) {
                attributes["prov:type"] =
                    std::vector<std::string>(node.app_types.begin(), node.app_types.end());
            }
            entries[node.id] = std::move(attributes);
        }
        if (!entries.empty()) out[section] = std::move(entries);
    }
    for (RelationLabel label : all_relation_labels) {
        const auto& info = relation_info(label);
        nlohmann::ordered_json records = nlohmann::ordered_json::object();
        std::size_t n = 0;
        for (const auto& edge : doc.edges()) {
            if (edge.label != label) continue;
            nlohmann::ordered_json record = nlohmann::ordered_json::object();
            record[std::string(info.src_field)] = doc.node(edge.src).id;
            record[std::string(info.dst_field)] = doc.node(edge.dst).id;
            records["_:" + std::string(info.short_name) + std::to_string(n++)] = std::move(record);
        }
        if (!records.empty()) out[std::string(info.section_name)] = std::move(records);
    }
    if (doc.declared_roots()) out["roots"] = *doc.declared_roots();
    return out.dump(2) + "\n";
}

} // namespace provsum
