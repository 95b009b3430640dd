#include "provsum/conformance.hpp"

#include <algorithm>
#include <limits>
#include <random>

#include <json.hpp>

#include "provsum/errors.hpp"

namespace provsum {

namespace {

constexpr std::size_t not_eliminated = std::numeric_limits<std::size_t>::max();

// Summary successors by (type, label).
class SummaryIndex {
public:
    explicit SummaryIndex(const Summary& s) : successors_(s.types.size() * relation_label_count) {
        for (const auto& edge : s.edges) {
            successors_[slot(edge.src, edge.label)].push_back(edge.dst);
        }
    }

    const std::vector<std::size_t>& successors(std::size_t type, RelationLabel label) const {
        return successors_[slot(type, label)];
    }

private:
    static std::size_t slot(std::size_t type, RelationLabel label) {
        return type * relation_label_count + static_cast<std::size_t>(label);
    }

    std::vector<std::vector<std::size_t>> successors_;
};

bool unmatched(const SummaryIndex& index, const SimulationRelation& relation, const EdgeRef& edge,
               std::size_t type) {
    const auto& targets = index.successors(type, edge.label);
    return std::none_of(targets.begin(), targets.end(),
                        [&](std::size_t target) { return relation.contains(edge.dst, target); });
}

bool violates(const ProvDocument& g, const SummaryIndex& index, const SimulationRelation& relation,
              NodeIndex node, std::size_t type) {
    for (const auto& edge : g.out_edges(node)) {
        if (unmatched(index, relation, edge, type)) return true;
    }
    return false;
}

std::vector<std::vector<NodeIndex>> predecessors(const ProvDocument& g) {
    std::vector<std::vector<NodeIndex>> preds(g.node_count());
    for (const auto& edge : g.edges()) preds[edge.dst].push_back(edge.src);
    for (auto& p : preds) p.erase(std::unique(p.begin(), p.end()), p.end());
    return preds;
}

} // namespace

std::string_view mode_name(ConformanceMode mode) {
    return mode == ConformanceMode::Structural ? "structural" : "rooted";
}

SimulationRelation::SimulationRelation(std::size_t node_count, std::size_t type_count,
                                       ConformanceMode mode)
    : mode_(mode),
      node_count_(node_count),
      type_count_(type_count),
      bits_(node_count * type_count, false),
      per_node_(node_count, 0),
      eliminated_in_(node_count, not_eliminated) {}

void SimulationRelation::insert(NodeIndex node, std::size_t type) {
    auto bit = bits_[node * type_count_ + type];
    if (bit) return;
    bit = true;
    ++per_node_[node];
}

void SimulationRelation::erase(NodeIndex node, std::size_t type, std::size_t round) {
    auto bit = bits_[node * type_count_ + type];
    if (!bit) return;
    bit = false;
    if (--per_node_[node] == 0) eliminated_in_[node] = round;
}

std::vector<std::size_t> SimulationRelation::types_of(NodeIndex node) const {
    std::vector<std::size_t> types;
    for (std::size_t t = 0; t < type_count_; ++t) {
        if (contains(node, t)) types.push_back(t);
    }
    return types;
}

std::vector<std::pair<NodeIndex, std::size_t>> SimulationRelation::pairs() const {
    std::vector<std::pair<NodeIndex, std::size_t>> out;
    for (NodeIndex n = 0; n < node_count_; ++n) {
        for (std::size_t t = 0; t < type_count_; ++t) {
            if (contains(n, t)) out.emplace_back(n, t);
        }
    }
    return out;
}

std::size_t SimulationRelation::size() const {
    std::size_t total = 0;
    for (auto count : per_node_) total += count;
    return total;
}

std::optional<std::size_t> SimulationRelation::elimination_round(NodeIndex node) const {
    if (eliminated_in_[node] == not_eliminated) return std::nullopt;
    return eliminated_in_[node];
}

std::vector<std::size_t> candidate_types(const ProvDocument& g, NodeIndex node, const Summary& s,
                                         bool strict_types) {
    std::vector<std::size_t> out;
    std::vector<std::string> bases;
    if (strict_types) {
        const ProvNode& n = g.node(node);
        for (CoreKind kind : n.core_types) bases.emplace_back(core_kind_name(kind));
        bases.insert(bases.end(), n.app_types.begin(), n.app_types.end());
    }
    for (std::size_t t = 0; t < s.types.size(); ++t) {
        if (strict_types) {
            const auto& level0 = s.types[t].signature.empty() ? std::vector<std::string>{}
                                                                : s.types[t].signature[0];
            bool covered = std::all_of(bases.begin(), bases.end(), [&](const std::string& b) {
                return std::find(level0.begin(), level0.end(), b) != level0.end();
            });
            if (!covered) continue;
        }
        out.push_back(t);
    }
    return out;
}

bool edge_unmatched(const ProvDocument& /*g*/, const Summary& s,
                    const SimulationRelation& relation, const EdgeRef& edge, std::size_t type) {
    return unmatched(SummaryIndex(s), relation, edge, type);
}

SimulationRelation greatest_simulation(const ProvDocument& g, const Summary& s,
                                       ConformanceMode mode, const SimulationOptions& options) {
    SimulationRelation relation(g.node_count(), s.types.size(), mode);
    for (NodeIndex n = 0; n < g.node_count(); ++n) {
        for (std::size_t t : candidate_types(g, n, s, options.strict_types)) relation.insert(n, t);
    }
    const SummaryIndex index(s);

    if (options.shuffle_seed) {
        std::mt19937_64 rng(*options.shuffle_seed);
        bool changed = true;
        while (changed) {
            changed = false;
            ++relation.rounds_;
            auto pairs = relation.pairs();
            std::shuffle(pairs.begin(), pairs.end(), rng);
            for (const auto& [node, type] : pairs) {
                if (violates(g, index, relation, node, type)) {
                    relation.erase(node, type, relation.rounds_);
                    changed = true;
                }
            }
        }
        return relation;
    }

    // Synchronous rounds: violations are judged against the relation as it
    // stood at the start of the round. Only predecessors of nodes that lost
    // a pair need rechecking in the next round.
    const auto preds = predecessors(g);
    std::vector<NodeIndex> dirty(g.node_count());
    for (NodeIndex n = 0; n < g.node_count(); ++n) dirty[n] = n;
    std::vector<char> marked(g.node_count(), 0);
    while (!dirty.empty()) {
        ++relation.rounds_;
        std::vector<std::pair<NodeIndex, std::size_t>> removals;
        for (NodeIndex node : dirty) {
            for (std::size_t t = 0; t < s.types.size(); ++t) {
                if (relation.contains(node, t) && violates(g, index, relation, node, t)) {
                    removals.emplace_back(node, t);
                }
            }
        }
        dirty.clear();
        std::fill(marked.begin(), marked.end(), 0);
        for (const auto& [node, type] : removals) {
            relation.erase(node, type, relation.rounds_);
            for (NodeIndex pred : preds[node]) {
                if (!marked[pred]) {
                    marked[pred] = 1;
                    dirty.push_back(pred);
                }
            }
        }
        std::sort(dirty.begin(), dirty.end());
    }
    return relation;
}

namespace {

Counterexample explain(const ProvDocument& g, const Summary& s, const SimulationRelation& relation,
                       NodeIndex node, bool strict_types) {
    Counterexample cx;
    cx.node = g.node(node).id;
    const auto candidates = candidate_types(g, node, s, strict_types);
    if (candidates.empty()) {
        cx.reason = strict_types ? "no summary type covers the node's level-0 types"
                                 : "the summary has no types";
        return cx;
    }

    const SummaryIndex index(s);
    std::optional<EdgeRef> best;
    std::vector<std::size_t> best_blocked;
    for (const auto& edge : g.out_edges(node)) {
        std::vector<std::size_t> blocked;
        for (std::size_t t : candidates) {
            if (unmatched(index, relation, edge, t)) blocked.push_back(t);
        }
        if (blocked.size() > best_blocked.size()) {
            best = edge;
            best_blocked = std::move(blocked);
        }
    }
    if (!best) {
        cx.reason = "node was eliminated without a failing edge";
        return cx;
    }

    const auto& target = g.node(best->dst).id;
    const std::string label(label_name(best->label));
    cx.edge = g.named(*best);
    for (std::size_t t : best_blocked) cx.blocked_types.push_back(s.types[t].id);
    if (best_blocked.size() == candidates.size()) {
        cx.reason = "no summary type has a '" + label + "' edge to a type simulating '" + target + "'";
    } else {
        std::string listed;
        for (const auto& id : cx.blocked_types) listed += (listed.empty() ? "" : ", ") + id;
        cx.reason = "'" + label + "' edge to '" + target + "' is unmatched from " + listed +
                    "; remaining candidates fail on other edges";
    }
    return cx;
}

} // namespace

ConformanceVerdict check_conformance(const ProvDocument& g, const Summary& s, ConformanceMode mode,
                                     const SimulationOptions& options) {
    std::vector<NodeIndex> roots;
    if (mode == ConformanceMode::Rooted) {
        roots = g.roots();
        if (roots.empty()) throw InputError("rooted conformance needs at least one instance root");
    }

    SimulationRelation relation = greatest_simulation(g, s, mode, options);
    ConformanceVerdict verdict;
    verdict.mode = mode;

    // Report the earliest eliminated node; nodes that never had a candidate
    // rank first.
    std::optional<NodeIndex> first;
    auto rank = [&](NodeIndex n) { return relation.elimination_round(n).value_or(0); };
    for (NodeIndex n = 0; n < g.node_count(); ++n) {
        if (relation.simulated(n)) continue;
        if (!first || rank(n) < rank(*first)) first = n;
    }
    if (first) {
        verdict.counterexample = explain(g, s, relation, *first, options.strict_types);
        return verdict;
    }

    for (NodeIndex root : roots) {
        bool matched = std::any_of(s.roots.begin(), s.roots.end(),
                                   [&](std::size_t t) { return relation.contains(root, t); });
        if (!matched) {
            verdict.counterexample = Counterexample{
                g.node(root).id, std::nullopt, "instance root is not related to any summary root", {}};
            return verdict;
        }
    }

    verdict.conforms = true;
    verdict.witness = std::move(relation);
    return verdict;
}

std::string verdict_to_json(const ConformanceVerdict& verdict) {
    nlohmann::ordered_json out;
    out["conforms"] = verdict.conforms;
    out["mode"] = std::string(mode_name(verdict.mode));
    if (verdict.counterexample) {
        const auto& cx = *verdict.counterexample;
        nlohmann::ordered_json c;
        c["node"] = cx.node;
        if (cx.edge) {
            c["edge"] = {{"src", cx.edge->src},
                         {"dst", cx.edge->dst},
                         {"label", std::string(label_name(cx.edge->label))}};
        }
        c["reason"] = cx.reason;
        out["counterexample"] = std::move(c);
    }
    return out.dump(2) + "\n";
}

} // namespace provsum
