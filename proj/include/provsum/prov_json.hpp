#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "provsum/prov_document.hpp"

namespace provsum {

struct ParseOptions {
    // Create untyped nodes for ids that only occur inside relation records
    // instead of rejecting them as dangling references.
    bool allow_undeclared_nodes = false;
};

/// Reads the PROV-JSON subset: "entity"/"activity"/"agent" sections, the 13
/// relation sections, "prefix" (ignored) and an optional "roots" id array.
/// Throws ParseError on anything else.
ProvDocument parse_document(std::string_view text, const ParseOptions& options = {});
ProvDocument parse_document(std::istream& in, const ParseOptions& options = {});
ProvDocument load_document(const std::string& path, const ParseOptions& options = {});

/// Serializes to the same subset. Relation records get generated ids; the
/// output is deterministic for equal documents.
std::string write_document(const ProvDocument& doc);

} // namespace provsum
