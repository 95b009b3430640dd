#pragma once

#include <cstdint>

#include "provsum/prov_document.hpp"

namespace provsum {

/// e_{n-1} wdf ... wdf e_0, all entities. Requires n >= 1.
ProvDocument generate_chain(std::size_t n);

/// `repeats` copies of a workflow motif (an output entity generated by an
/// activity that used an input entity) whose activities and outputs all point
/// at one shared agent. The seed only permutes how copies are numbered.
/// Requires repeats >= 1.
ProvDocument generate_pattern_graph(std::size_t repeats, std::uint64_t seed);

struct AnomalousPatternGraph {
    ProvDocument document;
    ProvEdge injected;
};

/// Pattern graph plus one foreign edge: the first copy's activity also used
/// the second copy's output. Requires repeats >= 2.
AnomalousPatternGraph generate_pattern_graph_with_anomaly(std::size_t repeats, std::uint64_t seed);

/// n nodes of random core kinds (some with a user-defined type) and about
/// edge_density * n distinct edges whose endpoints respect the relation
/// signatures. Deterministic per seed. Requires n >= 1, edge_density >= 0.
ProvDocument generate_random(std::size_t n, double edge_density, std::uint64_t seed);

} // namespace provsum
