#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace provsum {

enum class CoreKind : std::uint8_t { Entity, Activity, Agent };

inline constexpr std::array<CoreKind, 3> all_core_kinds = {
    CoreKind::Entity, CoreKind::Activity, CoreKind::Agent};

std::string_view core_kind_name(CoreKind kind);
std::optional<CoreKind> core_kind_from_name(std::string_view name);

// The 13 forward PROV relations, named by their short labels.
enum class RelationLabel : std::uint8_t {
    used,
    wgb,
    wdf,
    waw,
    wat,
    aobo,
    wib,
    wsb,
    web,
    wifb,
    mem,
    spec,
    alt,
};

inline constexpr std::size_t relation_label_count = 13;

inline constexpr std::array<RelationLabel, relation_label_count> all_relation_labels = {
    RelationLabel::used, RelationLabel::wgb,  RelationLabel::wdf,  RelationLabel::waw,
    RelationLabel::wat,  RelationLabel::aobo, RelationLabel::wib,  RelationLabel::wsb,
    RelationLabel::web,  RelationLabel::wifb, RelationLabel::mem,  RelationLabel::spec,
    RelationLabel::alt,
};

// Static description of a relation: how it is labelled in type terms, how it
// appears in PROV-JSON, and which core kinds its endpoints must carry.
struct RelationInfo {
    RelationLabel label;
    std::string_view short_name;   // "wdf"
    std::string_view section_name; // "wasDerivedFrom"
    std::string_view src_field;    // "prov:generatedEntity"
    std::string_view dst_field;    // "prov:usedEntity"
    CoreKind src_kind;
    CoreKind dst_kind;
};

const RelationInfo& relation_info(RelationLabel label);

std::string_view label_name(RelationLabel label);

std::optional<RelationLabel> label_from_name(std::string_view short_name);
std::optional<RelationLabel> label_from_section(std::string_view section_name);

} // namespace provsum
