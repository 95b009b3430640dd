#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "provsum/prov_document.hpp"
#include "provsum/summary.hpp"

namespace provsum {

// Structural: every instance node must be simulated. Rooted: additionally
// every instance root must be related to a summary root.
enum class ConformanceMode : std::uint8_t { Structural, Rooted };

std::string_view mode_name(ConformanceMode mode);

struct SimulationOptions {
    // Candidate types must cover the node's level-0 base types.
    bool strict_types = false;
    // Remove violating pairs one at a time in a seeded random order instead
    // of in synchronous rounds. The fixed point is the same either way.
    std::optional<std::uint64_t> shuffle_seed;
};

/// A relation between instance nodes and summary types (by index).
class SimulationRelation {
public:
    SimulationRelation(std::size_t node_count, std::size_t type_count, ConformanceMode mode);

    ConformanceMode mode() const { return mode_; }
    std::size_t node_count() const { return node_count_; }
    std::size_t type_count() const { return type_count_; }

    bool contains(NodeIndex node, std::size_t type) const {
        return bits_[node * type_count_ + type];
    }
    bool simulated(NodeIndex node) const { return per_node_[node] > 0; }
    std::vector<std::size_t> types_of(NodeIndex node) const;
    std::vector<std::pair<NodeIndex, std::size_t>> pairs() const;
    std::size_t size() const;

    /// Refinement round in which the node lost its last candidate.
    std::optional<std::size_t> elimination_round(NodeIndex node) const;
    std::size_t rounds() const { return rounds_; }

    bool operator==(const SimulationRelation& other) const {
        return mode_ == other.mode_ && node_count_ == other.node_count_ &&
               type_count_ == other.type_count_ && bits_ == other.bits_;
    }

private:
    friend SimulationRelation greatest_simulation(const ProvDocument&, const Summary&,
                                                  ConformanceMode, const SimulationOptions&);

    void insert(NodeIndex node, std::size_t type);
    void erase(NodeIndex node, std::size_t type, std::size_t round);

    ConformanceMode mode_;
    std::size_t node_count_;
    std::size_t type_count_;
    std::vector<bool> bits_;
    std::vector<std::size_t> per_node_;
    std::vector<std::size_t> eliminated_in_;
    std::size_t rounds_ = 0;
};

/// Largest relation closed under: (u,t) related and u -a-> v imply some
/// summary edge t -a-> t' with (v,t') related. Refines from all candidate
/// pairs down to the fixed point.
SimulationRelation greatest_simulation(const ProvDocument& g, const Summary& s,
                                       ConformanceMode mode = ConformanceMode::Structural,
                                       const SimulationOptions& options = {});

/// Types a node may start out related to (all, or base-type compatible ones).
std::vector<std::size_t> candidate_types(const ProvDocument& g, NodeIndex node, const Summary& s,
                                         bool strict_types);

/// True when (node, type) violates the closure condition for this edge.
bool edge_unmatched(const ProvDocument& g, const Summary& s, const SimulationRelation& relation,
                    const EdgeRef& edge, std::size_t type);

struct Counterexample {
    std::string node;
    std::optional<ProvEdge> edge;
    std::string reason;
    // Candidate types the reported edge fails against.
    std::vector<std::string> blocked_types;
};

struct ConformanceVerdict {
    bool conforms = false;
    ConformanceMode mode = ConformanceMode::Structural;
    std::optional<SimulationRelation> witness;
    std::optional<Counterexample> counterexample;
};

/// Throws InputError in rooted mode when the instance has no roots.
ConformanceVerdict check_conformance(const ProvDocument& g, const Summary& s,
                                     ConformanceMode mode = ConformanceMode::Structural,
                                     const SimulationOptions& options = {});

// {"conforms", "mode", "counterexample":{"node","edge":{...},"reason"}}
std::string verdict_to_json(const ConformanceVerdict& verdict);

} // namespace provsum
