#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tightpath/connectors.hpp"
#include "tightpath/extraction.hpp"
#include "tightpath/report.hpp"

namespace tightpath {

TwoColoring colour_uniform_random(const Hypergraph3& h, double p_blue, std::uint64_t seed);

// Intra-cluster triples get fair coins, cross-cluster triples are blue.
TwoColoring colour_cluster_mixer(const Hypergraph3& h, std::uint64_t seed);

// Blow-up clusters as a blue family, with the G^k pairs and triangles that
// connectors may span.
struct ClusterLayout {
    ClusterFamily family;
    ConnectorScope scope;
};

ClusterLayout cluster_layout(const HostInstance& host);

struct KillerOptions {
    double p_blue = 0.9;                       // initial bias of cross-cluster triples
    std::optional<std::size_t> flip_budget;    // unlimited when empty
};

struct KillerResult {
    TwoColoring colouring;
    std::size_t flips = 0;
    std::size_t residual = 0;  // scope entries still holding a blue c22 or c212
};

// Clusters stay blue; cross triples start random and every blue c22 (c212)
// found on a scope pair (triple, each middle) loses one triple to red until
// none is left or the budget runs out. The residual comes from a fresh
// detector pass.
KillerResult colour_connector_killer(const Hypergraph3& h, const ClusterLayout& layout, std::uint64_t seed,
                                     const KillerOptions& options = {});

// Blue c22 or c212 left on the layout's scope.
std::size_t count_live_connectors(const Hypergraph3& h, const TwoColoring& c, const ClusterLayout& layout);

enum class ColourerKind { uniform_random, all_blue, all_red, connector_killer, cluster_mixer };

struct ColourerSpec {
    ColourerKind kind = ColourerKind::uniform_random;
    double p_blue_lo = 0.5;  // per-trial bias drawn uniformly from [lo, hi]
    double p_blue_hi = 0.5;
    KillerOptions killer;
};

struct InstanceSpec {
    std::string source = "cycle_power";  // cycle_power | expander | file
    std::size_t vertices = 20;
    std::size_t power = 2;               // cycle_power: r
    ExpanderParams expander;             // expander
    std::string graph_file;              // file
};

struct ExperimentConfig {
    PipelineParams params;
    InstanceSpec instance;
    ColourerSpec colourer;
    std::size_t trials = 1;
    std::uint64_t seed = 0;
    std::size_t oracle_cap = 12;
    std::size_t workers = 0;  // 0 = hardware concurrency
    std::string report_path;
    std::string dump_dir;     // instance, colourings and paths for replay
};

ExperimentConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const ExperimentConfig& config);

Graph make_instance_graph(const InstanceSpec& spec);

struct TrialRow {
    std::size_t index = 0;
    std::uint64_t seed = 0;
    std::optional<PipelineOutcome> outcome;
    std::string hard_fault;             // set when the trial raised a hard fault
    std::size_t killer_flips = 0;
    std::size_t killer_residual = 0;
    double p_blue = 0.0;
    std::optional<LongestPath> oracle;  // when H is small enough
};

struct RunReport {
    ExperimentConfig config;
    std::size_t graph_vertices = 0, graph_edges = 0, hypergraph_vertices = 0, triples = 0;
    std::vector<TrialRow> rows;

    std::size_t hard_faults() const;
    std::size_t successes() const;
    std::size_t oracle_violations() const;
    nlohmann::json to_json() const;
};

// Runs every trial on a worker pool; trial i uses derive_seed(config.seed, i).
// Writes the report (and dumps) when the config names paths.
RunReport run_experiment(const ExperimentConfig& config);

}  // namespace tightpath
