#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "provsum/prov_document.hpp"
#include "provsum/ptype.hpp"
#include "provsum/summary.hpp"

namespace provsum {

/// Largest finite shortest-path distance from an Entity, Activity or Agent
/// node to a distinct Entity node; nullopt when no such pair exists.
std::optional<std::size_t> compute_mfd(const ProvDocument& doc);

/// counts[k] = number of APT(k) types, for k = 0..k_max.
std::vector<std::size_t> type_counts_over_k(const ProvDocument& doc, std::size_t k_max,
                                            Direction dir = Direction::Forward,
                                            std::size_t max_terms = default_max_terms);

/// Least k from which the counts stay constant up to the last probed level.
/// Only reported once the probe reaches the MFD (an absent MFD counts as 0).
std::optional<std::size_t> detect_plateau(const std::vector<std::size_t>& counts,
                                          std::optional<std::size_t> mfd);

/// Per core kind: summary types containing a node of that kind, divided by
/// nodes of that kind. Kinds absent from the document are omitted.
std::map<CoreKind, double> compression_ratios(const ProvDocument& doc, std::size_t k,
                                              Direction dir = Direction::Forward);

struct MetricsReport {
    std::size_t n_nodes = 0;
    std::size_t n_edges = 0;
    std::size_t max_in_degree = 0;
    std::optional<std::size_t> mfd;
    std::vector<std::size_t> type_counts;
    std::optional<std::size_t> plateau_k;
    std::vector<std::map<CoreKind, double>> compression; // indexed by k
};

MetricsReport compute_metrics(const ProvDocument& doc, std::size_t k_max,
                              std::size_t max_terms = default_max_terms);

std::string metrics_to_json(const MetricsReport& report);

struct OutlierEdge {
    SummaryEdge edge;
    std::uint64_t sibling_max;
    double ratio;
};

struct OutlierReport {
    double threshold;
    std::vector<OutlierEdge> flagged;
};

inline constexpr double default_outlier_threshold = 0.2;

/// Flags summary edges whose count is below `threshold` times the largest
/// count among edges incident to either of its endpoint types.
/// Throws std::invalid_argument unless 0 < threshold < 1.
OutlierReport outlier_edges(const Summary& s, double threshold = default_outlier_threshold);

std::string outliers_to_json(const Summary& s, const OutlierReport& report);

/// (type id, node weight) pairs sorted by id.
std::vector<std::pair<std::string, std::uint64_t>> scatter_data(const Summary& s);

} // namespace provsum
