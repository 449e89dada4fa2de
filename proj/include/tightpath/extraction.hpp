#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tightpath/connectors.hpp"
#include "tightpath/graph.hpp"
#include "tightpath/hypergraph.hpp"
#include "tightpath/two_three.hpp"

namespace tightpath {

struct PipelineParams {
    std::uint64_t ell = 2;
    std::uint64_t k = 4;
    Rational eps{1, 5};
    std::uint64_t t = 5;        // clique size sought inside each cluster
    std::uint64_t t_prime = 5;  // blow-up cluster size
    std::uint64_t c = 1;
    std::uint64_t a = 1;
    std::uint64_t n = 3;        // target path length
    bool strict_constants = false;

    Colour tie_break = Colour::blue;        // role colour when both colours cover equally many clusters
    bool require_p1 = false;                // certify G' before the alternating-path search
    std::size_t p1_trials = 200;
    std::uint64_t p1_seed = 0;
    std::uint64_t alternating_budget = 5'000'000;

    std::uint64_t m() const noexcept { return ell * n; }
};

// 8k + 40k^2 + 5
std::uint64_t paper_t(std::uint64_t k);
// 4(2k) + 10(4k^2): vertices pruning may remove from one cluster
std::uint64_t deletion_budget(std::uint64_t k);
// 2 * 5^k, or nothing when it does not fit in 64 bits
std::optional<std::uint64_t> paper_a(std::uint64_t k);

// Every violated identity among k = 2l, eps = 1/(k+1), t, a, budget = t - 5.
std::vector<std::string> constant_violations(const PipelineParams& params);

// Rejects parameters no run can use (zero sizes, t > t', ...). Under
// strict_constants also rejects any constant_violations().
void check_params(const PipelineParams& params);

// G, its k-th power, the blow-up by t' and the triangle hypergraph on it.
struct HostInstance {
    Graph g;
    Graph power;
    BlowUp blown;
    Hypergraph3 h;
};

HostInstance build_host(const Graph& g, std::uint64_t k, std::uint64_t t_prime);

// Blue conversion of an F-path. `family` is indexed like F's vertices.
TightPath3 blue_path_from_23path(const TwoThreePath& f_path, const ClusterFamily& family, const Hypergraph3& h,
                                 const TwoColoring& c);

struct DeletionRecord {
    ConnectorKind kind = ConnectorKind::c22;
    std::vector<std::size_t> positions;  // path positions: (i, j) or (i, j, middle)
    Connector connector;
};

struct PrunedClusters {
    std::vector<VertexSet> clusters;  // H* along the path, by position
    std::vector<DeletionRecord> audit;
};

// Removes every role-coloured c22 between clusters at path distance <= k and
// every role-coloured c212 among triples of positions spanning <= k, recording
// each deletion. More than two disjoint copies for one pair (or one triple and
// middle) would form a c66 (c636) and is a hard fault.
PrunedClusters power_path_and_prune(std::span<const VertexSet> clusters, std::size_t k, const Hypergraph3& h,
                                    const TwoColoring& c, Colour role);

// Two end-tuples (u1, u2), (w1, w2) with the non-role paths they end.
struct Quadruple {
    std::size_t level = 1;
    Vertex u1 = 0, u2 = 0, w1 = 0, w2 = 0;
    std::size_t cluster_u = 0, cluster_w = 0;  // path positions
    std::vector<Vertex> path_u;                 // ends (.., u1, u2)
    std::vector<Vertex> path_w;                 // ends (.., w1, w2)
    std::string step;                           // which case produced it
};

// Level-1 quadruple from the first two clusters.
Quadruple base_quadruple(std::span<const VertexSet> clusters);

// Q_i for q.level: ends in distinct clusters of window q.level, paths of
// colour `colour` with at least level+1 vertices inside windows 1..level.
std::optional<std::string> check_quadruple(const Quadruple& q, std::span<const VertexSet> clusters, std::size_t ell,
                                           const Hypergraph3& h, const TwoColoring& c, Colour colour);

struct ExtensionFailure {
    bool hypothesis = false;  // a precondition failed (as opposed to search exhaustion)
    std::string detail;
};

using ExtensionResult = std::variant<Quadruple, ExtensionFailure>;

// Lifts q from level i-1 to i using window i of `clusters`. Paths are in the
// colour opposite to `role`. With `strict` set, exhausting every case is a
// hard fault.
ExtensionResult extend_quadruple(const Quadruple& q, std::span<const VertexSet> clusters, std::size_t ell,
                                 const Hypergraph3& h, const TwoColoring& c, Colour role, bool strict);

enum class FailureKind {
    cluster_ramsey,
    p1_certificate_absent,
    obstruction_undersized,
    alternating_path_budget,
    alternating_path_absent,
    pruning_underflow,
    window_hypothesis,
    quadruple_extension,
};

std::string failure_kind_name(FailureKind kind);

struct PipelineFailure {
    FailureKind kind = FailureKind::cluster_ramsey;
    std::string detail;
};

struct PipelineTrace {
    std::optional<Colour> role;
    std::size_t blue_clusters = 0;  // clusters holding a blue K_t
    std::size_t red_clusters = 0;
    std::size_t role_clusters = 0;
    std::size_t f_two_edges = 0;
    std::size_t f_three_edges = 0;
    std::string branch;  // "blue", "red" or empty when the run stopped earlier
    std::optional<TwoThreePath> f_path;
    std::vector<VertexSet> obstruction_sets;  // origin ids
    std::optional<ExpansionCertificate> p1;
    std::vector<Vertex> alternating_path;     // origin ids
    std::uint64_t alternating_expansions = 0;
    std::vector<DeletionRecord> deletions;
    std::vector<std::string> quadruple_steps;
    std::vector<std::pair<std::string, double>> timings_ms;
};

struct PipelineOutcome {
    std::optional<Colour> colour;
    TightPath3 path;
    std::optional<PipelineFailure> failure;
    PathVerdict verdict;
    PipelineTrace trace;

    bool success() const noexcept { return colour.has_value(); }
};

// Finds a monochromatic tight path on at least n vertices in `host.h` under
// colouring `c`, or reports which hypothesis failed at desk scale.
PipelineOutcome extract_mono_tight_path(const HostInstance& host, const PipelineParams& params, const TwoColoring& c);

}  // namespace tightpath
