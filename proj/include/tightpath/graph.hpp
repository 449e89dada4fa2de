#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tightpath/types.hpp"

namespace tightpath {

using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph with sorted adjacency lists and optional partition
// labels. Immutable once built.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t num_vertices);

    // Normalises each pair to u < v and drops duplicates. Self-loops and
    // out-of-range ids are rejected.
    static Graph from_edges(std::size_t num_vertices, std::span<const Edge> edges);

    std::size_t num_vertices() const noexcept { return adjacency_.size(); }
    std::size_t num_edges() const noexcept { return num_edges_; }
    std::span<const Vertex> neighbours(Vertex v) const { return adjacency_.at(v); }
    std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
    std::size_t max_degree() const noexcept;
    bool has_edge(Vertex u, Vertex v) const;

    // Common degree when every vertex has the same degree.
    std::optional<std::size_t> regular_degree() const noexcept;

    // All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;

    bool has_labels() const noexcept { return !labels_.empty(); }
    const std::vector<std::uint32_t>& labels() const noexcept { return labels_; }
    Graph with_labels(std::vector<std::uint32_t> labels) const;

    // Declared degree cap; set only if every vertex already satisfies it.
    std::optional<std::size_t> degree_bound() const noexcept { return degree_bound_; }
    Graph with_degree_bound(std::size_t bound) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.adjacency_ == b.adjacency_ && a.labels_ == b.labels_;
    }

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<std::uint32_t> labels_;
    std::optional<std::size_t> degree_bound_;
    std::size_t num_edges_ = 0;
};

struct ExpanderParams {
    Rational eps{1, 5};
    std::uint64_t a = 1;
    std::uint64_t b = 4;  // degree of the sampled regular graph
    std::uint64_t seed = 0;
};

// Random b-regular graph on a*n vertices: the union of b/2 random Hamilton
// cycles, each repaired by 2-opt moves until it avoids the edges already
// placed. Deterministic for a fixed seed.
Graph sample_expander(const ExpanderParams& params, std::size_t n);

enum class CertificationMode { spectral, sampled };

struct SetPair {
    VertexSet s;
    VertexSet t;
};

struct ExpansionCertificate {
    CertificationMode mode = CertificationMode::spectral;
    bool passed = false;
    std::size_t set_size = 0;     // ceil(eps * n)
    // spectral
    std::size_t degree = 0;
    double lambda_bound = 0.0;    // estimate of max |lambda_i|, i >= 2
    double threshold = 0.0;       // degree * set_size / num_vertices
    std::size_t iterations = 0;
    // sampled
    std::size_t trials = 0;
    std::vector<SetPair> violations;
};

struct CertifyOptions {
    CertificationMode mode = CertificationMode::spectral;
    std::size_t trials = 1000;
    std::uint64_t seed = 0;
    std::size_t max_iterations = 400;
    double tolerance = 1e-9;
};

// Expansion check: every two disjoint sets of size >= ceil(eps*n) span an edge.
// Spectral mode certifies through the expander mixing lemma; sampled mode only
// falsifies.
ExpansionCertificate certify_p1(const Graph& g, Rational eps, std::size_t n,
                                const CertifyOptions& options = {});

// Number of edges with one endpoint in s and the other in t. s, t disjoint.
std::size_t edge_count_between(const Graph& g, std::span<const Vertex> s, std::span<const Vertex> t);

struct AlternatingPathResult {
    enum class Status { found, exhausted, budget_exhausted };
    Status status = Status::exhausted;
    std::vector<Vertex> path;
    std::uint64_t expansions = 0;

    bool found() const noexcept { return status == Status::found; }
};

// Path (x_0, .., x_{m-1}) with x_i in sets[i mod sets.size()], by depth-first
// backtracking along class-respecting edges. `budget` caps the number of
// search-tree nodes.
AlternatingPathResult find_alternating_path(const Graph& g, std::span<const VertexSet> sets,
                                            std::size_t m, std::uint64_t budget = 5'000'000);

// uv is an edge iff 1 <= dist(u, v) <= k.
Graph graph_power(const Graph& g, std::size_t k);

struct BlowUp {
    Graph graph;
    std::vector<Vertex> cluster_map;  // new vertex -> origin vertex
    std::size_t cluster_size = 0;

    // New ids of the cluster replacing `origin`: origin*t .. origin*t + t-1.
    VertexSet cluster(Vertex origin) const;
};

// Vertex -> K_t, edge -> K_{t,t}.
BlowUp blow_up(const Graph& g, std::size_t t);

// Quotient of a graph by a vertex -> class map (loops dropped).
Graph contract(const Graph& g, std::span<const Vertex> class_of, std::size_t num_classes);

struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_parent;  // new id -> original id
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

// C_n^r: i ~ j iff their cyclic distance is between 1 and r.
Graph cycle_power(std::size_t n, std::size_t r);

void write_graph(std::ostream& out, const Graph& g);
Graph read_graph(std::istream& in);

}  // namespace tightpath
