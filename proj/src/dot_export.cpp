#include "provsum/dot_export.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace provsum {

namespace {

std::string quoted(const std::string& text) {
    std::string out = "\"";
    for (char c : text) {
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

std::string fixed2(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.2f", value);
    return buffer;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (const auto& part : parts) {
        if (!out.empty()) out += sep;
        out += part;
    }
    return out;
}

} // namespace

double dot_penwidth(std::uint64_t count, std::uint64_t max_count) {
    if (max_count == 0) return 1.0;
    return 1.0 + 4.0 * static_cast<double>(count) / static_cast<double>(max_count);
}

std::string export_dot(const Summary& summary) {
    std::uint64_t max_weight = 0;
    for (const auto& type : summary.types) max_weight = std::max(max_weight, type.node_weight);
    std::uint64_t max_count = 0;
    for (const auto& edge : summary.edges) max_count = std::max(max_count, edge.count);

    std::string dot = "digraph summary {\n";
    dot += "  rankdir=BT;\n";
    dot += "  node [shape=ellipse];\n";
    for (std::size_t i = 0; i < summary.types.size(); ++i) {
        const auto& type = summary.types[i];
        const std::vector<std::string> level0 =
            type.signature.empty() ? std::vector<std::string>{} : type.signature[0];
        std::string tooltip;
        for (std::size_t level = 0; level < type.signature.size(); ++level) {
            if (level > 0) tooltip += "\n";
            tooltip += std::to_string(level) + ": {" + join(type.signature[level], ", ") + "}";
        }
        // Width and height scale with the square root so area tracks weight.
        const double share = max_weight == 0 ? 0.0
                                             : static_cast<double>(type.node_weight) /
                                                   static_cast<double>(max_weight);
        const double size = 0.5 + 1.5 * std::sqrt(share);
        dot += "  " + quoted(type.id) + " [label=" +
               quoted(type.id + "\n" + join(level0, ", ") + "\n(" +
                      std::to_string(type.node_weight) + ")") +
               ", width=" + fixed2(size) + ", height=" + fixed2(size * 0.75) +
               ", tooltip=" + quoted(tooltip) + "];\n";
    }
    for (const auto& edge : summary.edges) {
        dot += "  " + quoted(summary.types[edge.src].id) + " -> " +
               quoted(summary.types[edge.dst].id) + " [label=" +
               quoted(std::string(label_name(edge.label)) + " (" + std::to_string(edge.count) + ")") +
               ", penwidth=" + fixed2(dot_penwidth(edge.count, max_count)) + "];\n";
    }
    dot += "}\n";
    return dot;
}

} // namespace provsum
