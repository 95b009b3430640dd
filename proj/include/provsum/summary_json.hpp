#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "provsum/summary.hpp"

namespace provsum {

// {"k", "direction", "types":[{"id","signature":{"0":[...]},"nodes"}],
//  "edges":[{"src","dst","label","count"}], "roots":[...], "assignment":{...}}
std::string summary_to_json(const Summary& summary, bool include_assignment = false);

/// Throws ParseError on malformed input or dangling type references.
Summary parse_summary(std::string_view text);
Summary load_summary(const std::string& path);

} // namespace provsum
