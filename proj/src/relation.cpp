#include "provsum/relation.hpp"

namespace provsum {

namespace {

constexpr std::array<RelationInfo, relation_label_count> relation_table = {{
    {RelationLabel::used, "used", "used", "prov:activity", "prov:entity",
     CoreKind::Activity, CoreKind::Entity},
    {RelationLabel::wgb, "wgb", "wasGeneratedBy", "prov:entity", "prov:activity",
     CoreKind::Entity, CoreKind::Activity},
    {RelationLabel::wdf, "wdf", "wasDerivedFrom", "prov:generatedEntity", "prov:usedEntity",
     CoreKind::Entity, CoreKind::Entity},
    {RelationLabel::waw, "waw", "wasAssociatedWith", "prov:activity", "prov:agent",
     CoreKind::Activity, CoreKind::Agent},
    {RelationLabel::wat, "wat", "wasAttributedTo", "prov:entity", "prov:agent",
     CoreKind::Entity, CoreKind::Agent},
    {RelationLabel::aobo, "aobo", "actedOnBehalfOf", "prov:delegate", "prov:responsible",
     CoreKind::Agent, CoreKind::Agent},
    {RelationLabel::wib, "wib", "wasInvalidatedBy", "prov:entity", "prov:activity",
     CoreKind::Entity, CoreKind::Activity},
    {RelationLabel::wsb, "wsb", "wasStartedBy", "prov:activity", "prov:trigger",
     CoreKind::Activity, CoreKind::Entity},
    {RelationLabel::web, "web", "wasEndedBy", "prov:activity", "prov:trigger",
     CoreKind::Activity, CoreKind::Entity},
    {RelationLabel::wifb, "wifb", "wasInformedBy", "prov:informed", "prov:informant",
     CoreKind::Activity, CoreKind::Activity},
    {RelationLabel::mem, "mem", "hadMember", "prov:collection", "prov:entity",
     CoreKind::Entity, CoreKind::Entity},
    {RelationLabel::spec, "spec", "specializationOf", "prov:specificEntity",
     "prov:generalEntity", CoreKind::Entity, CoreKind::Entity},
    {RelationLabel::alt, "alt", "alternateOf", "prov:alternate1", "prov:alternate2",
     CoreKind::Entity, CoreKind::Entity},
}};

} // namespace

std::string_view core_kind_name(CoreKind kind) {
    switch (kind) {
    case CoreKind::Entity: return "Entity";
    case CoreKind::Activity: return "Activity";
    case CoreKind::Agent: return "Agent";
    }
    return "?";
}

std::optional<CoreKind> core_kind_from_name(std::string_view name) {
    for (CoreKind kind : all_core_kinds) {
        if (core_kind_name(kind) == name) return kind;
    }
    return std::nullopt;
}

const RelationInfo& relation_info(RelationLabel label) {
    return relation_table[static_cast<std::size_t>(label)];
}

std::string_view label_name(RelationLabel label) { return relation_info(label).short_name; }

std::optional<RelationLabel> label_from_name(std::string_view short_name) {
    for (const auto& info : relation_table) {
        if (info.short_name == short_name) return info.label;
    }
    return std::nullopt;
}

std::optional<RelationLabel> label_from_section(std::string_view section_name) {
    for (const auto& info : relation_table) {
        if (info.section_name == section_name) return info.label;
    }
    return std::nullopt;
}

} // namespace provsum
