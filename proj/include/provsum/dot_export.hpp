#pragma once

#include <cstdint>
#include <string>

#include "provsum/summary.hpp"

namespace provsum {

/// Graphviz rendering of a weighted summary. Edge penwidth is
/// 1 + 4 * count / max_count; node area grows with node_weight / max_weight.
/// Labels carry the type id and its level-0 types, the tooltip the whole
/// canonical signature.
std::string export_dot(const Summary& summary);

double dot_penwidth(std::uint64_t count, std::uint64_t max_count);

} // namespace provsum
