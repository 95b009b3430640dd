#include "provsum/cli.hpp"

#include <fstream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "provsum/conformance.hpp"
#include "provsum/dot_export.hpp"
#include "provsum/errors.hpp"
#include "provsum/generators.hpp"
#include "provsum/metrics.hpp"
#include "provsum/prov_json.hpp"
#include "provsum/summary.hpp"
#include "provsum/summary_json.hpp"

namespace provsum {

namespace {

struct RunConfig {
    std::string input;
    std::string graph;
    std::string summary;
    long long k = 1;
    long long k_max = 6;
    std::string direction = "forward";
    bool rooted = false;
    bool strict_types = false;
    double threshold = default_outlier_threshold;
    std::string format = "json";
    std::string out;
    std::uint64_t seed = 0;
    std::string node;
    bool with_assignment = false;
    std::size_t max_terms = default_max_terms;
    // generate
    std::string shape = "random";
    std::size_t size = 100;
    double density = 2.0;
    bool anomaly = false;
};

class Emitter {
public:
    Emitter(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
        if (!path.empty()) {
            file_.emplace(path, std::ios::binary);
            if (!*file_) throw InputError("cannot write '" + path + "'");
        }
    }
    std::ostream& stream() { return file_ ? *file_ : fallback_; }

private:
    std::ostream& fallback_;
    std::optional<std::ofstream> file_;
};

void check_config(const RunConfig& cfg) {
    if (cfg.k < 0) throw InputError("--k must be non-negative");
    if (cfg.k_max < 0) throw InputError("--k-max must be non-negative");
    if (!(cfg.threshold > 0.0 && cfg.threshold < 1.0)) {
        throw InputError("--threshold must lie strictly between 0 and 1");
    }
    if (cfg.format != "json" && cfg.format != "dot") throw InputError("--format must be json or dot");
    if (!direction_from_name(cfg.direction)) {
        throw InputError("--direction must be forward or inverse");
    }
}

Direction direction_of(const RunConfig& cfg) { return *direction_from_name(cfg.direction); }

ProvDocument read_graph(const std::string& path, std::ostream& err) {
    if (path.empty()) throw InputError("an input graph is required");
    InferenceResult inferred = infer_core_types(load_document(path));
    for (const auto& warning : inferred.warnings) {
        err << "warning: " << warning.node << ": " << warning.message << "\n";
    }
    return std::move(inferred.document);
}

int cmd_summarize(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    ProvDocument doc = read_graph(cfg.input, err);
    Summary summary = apt(doc, static_cast<std::size_t>(cfg.k), direction_of(cfg), cfg.max_terms);
    Emitter emit(cfg.out, out);
    if (cfg.format == "dot") {
        emit.stream() << export_dot(summary);
    } else {
        emit.stream() << summary_to_json(summary, cfg.with_assignment);
    }
    return exit_ok;
}

int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    ProvDocument doc = read_graph(cfg.graph.empty() ? cfg.input : cfg.graph, err);
    if (cfg.summary.empty()) throw InputError("--summary is required");
    Summary summary = load_summary(cfg.summary);
    SimulationOptions options;
    options.strict_types = cfg.strict_types;
    ConformanceVerdict verdict = check_conformance(
        doc, summary, cfg.rooted ? ConformanceMode::Rooted : ConformanceMode::Structural, options);
    Emitter emit(cfg.out, out);
    emit.stream() << verdict_to_json(verdict);
    return verdict.conforms ? exit_ok : exit_not_conformant;
}

int cmd_metrics(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    ProvDocument doc = read_graph(cfg.input, err);
    MetricsReport report = compute_metrics(doc, static_cast<std::size_t>(cfg.k_max), cfg.max_terms);
    Emitter emit(cfg.out, out);
    emit.stream() << metrics_to_json(report);
    return exit_ok;
}

int cmd_outliers(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    Summary summary;
    if (!cfg.summary.empty()) {
        summary = load_summary(cfg.summary);
    } else {
        ProvDocument doc = read_graph(cfg.input, err);
        summary = apt(doc, static_cast<std::size_t>(cfg.k), direction_of(cfg), cfg.max_terms);
    }
    OutlierReport report = outlier_edges(summary, cfg.threshold);
    Emitter emit(cfg.out, out);
    emit.stream() << outliers_to_json(summary, report);
    return exit_ok;
}

int cmd_types(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    ProvDocument doc = read_graph(cfg.input, err);
    const auto k = static_cast<std::size_t>(cfg.k);
    Signatures signatures = compute_signatures(doc, k, direction_of(cfg), cfg.max_terms);

    std::vector<NodeIndex> selected;
    if (!cfg.node.empty()) {
        selected.push_back(doc.index_of(cfg.node));
    } else {
        for (NodeIndex i = 0; i < doc.node_count(); ++i) selected.push_back(i);
    }

    nlohmann::ordered_json nodes = nlohmann::ordered_json::object();
    for (NodeIndex node : selected) {
        nlohmann::ordered_json levels = nlohmann::ordered_json::object();
        const auto rendered = signatures.rendered(node);
        for (std::size_t level = 0; level < rendered.size(); ++level) {
            levels[std::to_string(level)] = rendered[level];
        }
        nodes[doc.node(node).id] = std::move(levels);
    }
    nlohmann::ordered_json result;
    result["k"] = k;
    result["direction"] = cfg.direction;
    result["nodes"] = std::move(nodes);
    Emitter emit(cfg.out, out);
    emit.stream() << result.dump(2) << "\n";
    return exit_ok;
}

int cmd_generate(const RunConfig& cfg, std::ostream& out) {
    ProvDocument doc;
    try {
        if (cfg.shape == "chain") {
            doc = generate_chain(cfg.size);
        } else if (cfg.shape == "pattern") {
            doc = cfg.anomaly ? generate_pattern_graph_with_anomaly(cfg.size, cfg.seed).document
                              : generate_pattern_graph(cfg.size, cfg.seed);
        } else if (cfg.shape == "random") {
            doc = generate_random(cfg.size, cfg.density, cfg.seed);
        } else {
            throw InputError("--shape must be chain, pattern or random");
        }
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    Emitter emit(cfg.out, out);
    emit.stream() << write_document(doc);
    return exit_ok;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Summarize PROV graphs by aggregation of provenance types", "provsum"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", cfg.out, "Write the result to this file instead of stdout");
        cmd->add_option("--max-terms", cfg.max_terms, "Cap on interned provenance type terms");
    };

    auto* summarize = app.add_subcommand("summarize", "Compute the APT(k) summary of a graph");
    summarize->add_option("--input", cfg.input, "PROV-JSON document")->required();
    summarize->add_option("--k", cfg.k, "Type level");
    summarize->add_option("--direction", cfg.direction, "forward or inverse");
    summarize->add_option("--format", cfg.format, "json or dot");
    summarize->add_flag("--assignment", cfg.with_assignment, "Include the node assignment");
    add_common(summarize);

    auto* check = app.add_subcommand("check", "Check a graph against a summary");
    check->add_option("--graph,--input", cfg.graph, "PROV-JSON instance graph")->required();
    check->add_option("--summary", cfg.summary, "Summary JSON")->required();
    check->add_flag("--rooted", cfg.rooted, "Also require roots to map onto summary roots");
    check->add_flag("--strict-types", cfg.strict_types,
                    "Only relate nodes to types covering their level-0 types");
    add_common(check);

    auto* metrics = app.add_subcommand("metrics", "Report size, MFD, type counts and compression");
    metrics->add_option("--input", cfg.input, "PROV-JSON document")->required();
    metrics->add_option("--k-max", cfg.k_max, "Largest level to probe");
    add_common(metrics);

    auto* outliers = app.add_subcommand("outliers", "List thin summary edges");
    outliers->add_option("--input", cfg.input, "PROV-JSON document to summarize");
    outliers->add_option("--summary", cfg.summary, "Existing summary JSON");
    outliers->add_option("--k", cfg.k, "Type level when summarizing --input");
    outliers->add_option("--direction", cfg.direction, "forward or inverse");
    outliers->add_option("--threshold", cfg.threshold, "Flag edges below this fraction");
    add_common(outliers);

    auto* types = app.add_subcommand("types", "Print per-node provenance types");
    types->add_option("--input", cfg.input, "PROV-JSON document")->required();
    types->add_option("--k", cfg.k, "Type level");
    types->add_option("--direction", cfg.direction, "forward or inverse");
    types->add_option("--node", cfg.node, "Only this node");
    add_common(types);

    auto* generate = app.add_subcommand("generate", "Write a synthetic PROV-JSON document");
    generate->add_option("--shape", cfg.shape, "chain, pattern or random");
    generate->add_option("--size", cfg.size, "Nodes (chain, random) or repeats (pattern)");
    generate->add_option("--density", cfg.density, "Edges per node (random)");
    generate->add_option("--seed", cfg.seed, "Generator seed");
    generate->add_flag("--anomaly", cfg.anomaly, "Inject one foreign edge (pattern)");
    generate->add_option("--out", cfg.out, "Write the result to this file instead of stdout");

    std::vector<std::string> storage;
    storage.reserve(args.size() + 1);
    storage.push_back("provsum");
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& arg : storage) argv.push_back(arg.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        const CLI::App* target = &app;
        for (const auto* sub : app.get_subcommands()) target = sub;
        out << target->help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }

    try {
        check_config(cfg);
        if (summarize->parsed()) return cmd_summarize(cfg, out, err);
        if (check->parsed()) return cmd_check(cfg, out, err);
        if (metrics->parsed()) return cmd_metrics(cfg, out, err);
        if (outliers->parsed()) return cmd_outliers(cfg, out, err);
        if (types->parsed()) return cmd_types(cfg, out, err);
        if (generate->parsed()) return cmd_generate(cfg, out);
    } catch (const ResourceLimitError& e) {
        err << "error: " << e.what() << "\n";
        return exit_resource_limit;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }
    return exit_input_error;
}

} // namespace provsum
