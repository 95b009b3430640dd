#include "provsum/metrics.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace provsum {

std::optional<std::size_t> compute_mfd(const ProvDocument& doc) {
    const std::size_t n = doc.node_count();
    constexpr std::size_t unseen = static_cast<std::size_t>(-1);
    std::vector<std::size_t> dist(n, unseen);
    std::vector<NodeIndex> queue;
    queue.reserve(n);

    std::optional<std::size_t> best;
    for (NodeIndex source = 0; source < n; ++source) {
        if (doc.node(source).core_types.empty()) continue;

        std::fill(dist.begin(), dist.end(), unseen);
        queue.clear();
        dist[source] = 0;
        queue.push_back(source);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            NodeIndex at = queue[head];
            for (const auto& edge : doc.out_edges(at)) {
                if (dist[edge.dst] != unseen) continue;
                dist[edge.dst] = dist[at] + 1;
                queue.push_back(edge.dst);
            }
        }
        for (NodeIndex reached : queue) {
            if (reached == source) continue;
            if (doc.node(reached).core_types.count(CoreKind::Entity) == 0) continue;
            if (!best || dist[reached] > *best) best = dist[reached];
        }
    }
    return best;
}

namespace {

std::size_t distinct_prefix_keys(const Signatures& signatures, std::size_t k) {
    std::set<std::string> keys;
    for (NodeIndex i = 0; i < signatures.node_count(); ++i) keys.insert(signatures.key(i, k));
    return keys.size();
}

std::map<CoreKind, double> ratios_at(const ProvDocument& doc, const Signatures& signatures,
                                     std::size_t k) {
    std::map<CoreKind, std::set<std::string>> types_by_kind;
    std::map<CoreKind, std::size_t> nodes_by_kind;
    for (NodeIndex i = 0; i < doc.node_count(); ++i) {
        const auto& kinds = doc.node(i).core_types;
        if (kinds.empty()) continue;
        std::string key = signatures.key(i, k);
        for (CoreKind kind : kinds) {
            types_by_kind[kind].insert(key);
            ++nodes_by_kind[kind];
        }
    }
    std::map<CoreKind, double> ratios;
    for (const auto& [kind, count] : nodes_by_kind) {
        ratios[kind] = static_cast<double>(types_by_kind[kind].size()) / static_cast<double>(count);
    }
    return ratios;
}

} // namespace

std::vector<std::size_t> type_counts_over_k(const ProvDocument& doc, std::size_t k_max,
                                            Direction dir, std::size_t max_terms) {
    // The k-signature is the prefix of the k_max-signature, so one pass
    // serves every level.
    Signatures signatures = compute_signatures(doc, k_max, dir, max_terms);
    std::vector<std::size_t> counts;
    for (std::size_t k = 0; k <= k_max; ++k) counts.push_back(distinct_prefix_keys(signatures, k));
    return counts;
}

std::optional<std::size_t> detect_plateau(const std::vector<std::size_t>& counts,
                                          std::optional<std::size_t> mfd) {
    if (counts.empty()) return std::nullopt;
    const std::size_t k_max = counts.size() - 1;
    if (k_max < mfd.value_or(0)) return std::nullopt;
    std::size_t k = k_max;
    while (k > 0 && counts[k - 1] == counts[k_max]) --k;
    return k;
}

std::map<CoreKind, double> compression_ratios(const ProvDocument& doc, std::size_t k,
                                              Direction dir) {
    return ratios_at(doc, compute_signatures(doc, k, dir), k);
}

MetricsReport compute_metrics(const ProvDocument& doc, std::size_t k_max, std::size_t max_terms) {
    MetricsReport report;
    report.n_nodes = doc.node_count();
    report.n_edges = doc.edge_count();
    report.max_in_degree = doc.max_in_degree();
    report.mfd = compute_mfd(doc);

    Signatures signatures = compute_signatures(doc, k_max, Direction::Forward, max_terms);
    for (std::size_t k = 0; k <= k_max; ++k) {
        report.type_counts.push_back(distinct_prefix_keys(signatures, k));
        report.compression.push_back(ratios_at(doc, signatures, k));
    }
    report.plateau_k = detect_plateau(report.type_counts, report.mfd);
    return report;
}

std::string metrics_to_json(const MetricsReport& report) {
    nlohmann::ordered_json out;
    out["n_nodes"] = report.n_nodes;
    out["n_edges"] = report.n_edges;
    out["max_in_degree"] = report.max_in_degree;
    if (report.mfd) {
        out["mfd"] = *report.mfd;
    } else {
        out["mfd"] = "none";
    }
    nlohmann::ordered_json counts = nlohmann::ordered_json::object();
    for (std::size_t k = 0; k < report.type_counts.size(); ++k) {
        counts[std::to_string(k)] = report.type_counts[k];
    }
    out["type_counts"] = std::move(counts);
    if (report.plateau_k) {
        out["plateau_k"] = *report.plateau_k;
    } else {
        out["plateau_k"] = "not-reached";
    }
    nlohmann::ordered_json compression = nlohmann::ordered_json::object();
    for (std::size_t k = 0; k < report.compression.size(); ++k) {
        nlohmann::ordered_json by_kind = nlohmann::ordered_json::object();
        for (const auto& [kind, ratio] : report.compression[k]) {
            by_kind[std::string(core_kind_name(kind))] = ratio;
        }
        compression[std::to_string(k)] = std::move(by_kind);
    }
    out["compression"] = std::move(compression);
    return out.dump(2) + "\n";
}

OutlierReport outlier_edges(const Summary& s, double threshold) {
    if (!(threshold > 0.0 && threshold < 1.0)) {
        throw std::invalid_argument("outlier threshold must lie strictly between 0 and 1");
    }
    std::vector<std::uint64_t> incident_max(s.types.size(), 0);
    for (const auto& edge : s.edges) {
        incident_max[edge.src] = std::max(incident_max[edge.src], edge.count);
        incident_max[edge.dst] = std::max(incident_max[edge.dst], edge.count);
    }
    OutlierReport report{threshold, {}};
    for (const auto& edge : s.edges) {
        std::uint64_t sibling_max = std::max(incident_max[edge.src], incident_max[edge.dst]);
        double ratio = static_cast<double>(edge.count) / static_cast<double>(sibling_max);
        if (ratio < threshold) report.flagged.push_back(OutlierEdge{edge, sibling_max, ratio});
    }
    return report;
}

std::string outliers_to_json(const Summary& s, const OutlierReport& report) {
    nlohmann::ordered_json out;
    out["threshold"] = report.threshold;
    nlohmann::ordered_json flagged = nlohmann::ordered_json::array();
    for (const auto& outlier : report.flagged) {
        flagged.push_back({{"src", s.types[outlier.edge.src].id},
                           {"dst", s.types[outlier.edge.dst].id},
                           {"label", std::string(label_name(outlier.edge.label))},
                           {"count", outlier.edge.count},
                           {"sibling_max", outlier.sibling_max},
                           {"ratio", outlier.ratio}});
    }
    out["outliers"] = std::move(flagged);
    return out.dump(2) + "\n";
}

std::vector<std::pair<std::string, std::uint64_t>> scatter_data(const Summary& s) {
    std::vector<std::pair<std::string, std::uint64_t>> points;
    points.reserve(s.types.size());
    for (const auto& type : s.types) points.emplace_back(type.id, type.node_weight);
    std::sort(points.begin(), points.end());
    return points;
}

} // namespace provsum
