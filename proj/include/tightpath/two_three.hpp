#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "tightpath/hypergraph.hpp"
#include "tightpath/types.hpp"

namespace tightpath {

// 2-edge uv
struct TwoEdge {
    Vertex u = 0, v = 0;
};

// 3-edge uv(w): the pair {u, v} with witness w
struct ThreeEdge {
    Vertex u = 0, v = 0, w = 0;
};

// Generalised graph with 2-edges {u, v} and 3-edges ({u, v}, w).
class TwoThreeGraph {
public:
    TwoThreeGraph() = default;
    explicit TwoThreeGraph(std::size_t num_vertices);

    // Both adders are idempotent.
    void add_two_edge(Vertex u, Vertex v);
    void add_three_edge(Vertex u, Vertex v, Vertex w);

    std::size_t num_vertices() const noexcept { return two_adjacency_.size(); }
    std::size_t num_two_edges() const noexcept { return num_two_; }
    std::size_t num_three_edges() const noexcept { return num_three_; }

    bool has_two_edge(Vertex u, Vertex v) const;
    bool has_three_edge(Vertex u, Vertex v, Vertex w) const;
    // Witnesses w of uv(w), ascending by id.
    std::span<const Vertex> witnesses(Vertex u, Vertex v) const;
    // Vertices joined to u by a 2-edge or by at least one 3-edge, ascending.
    std::span<const Vertex> partners(Vertex u) const { return partners_.at(u); }

    std::vector<TwoEdge> two_edges() const;
    std::vector<ThreeEdge> three_edges() const;

private:
    static std::uint64_t key(Vertex u, Vertex v);
    void check(Vertex v) const;
    void add_partner(Vertex u, Vertex v);

    std::vector<std::vector<Vertex>> two_adjacency_;
    std::vector<std::vector<Vertex>> partners_;
    std::unordered_map<std::uint64_t, std::vector<Vertex>> witnesses_;
    std::size_t num_two_ = 0;
    std::size_t num_three_ = 0;
};

// (x_1, .., x_m) where step i uses a 2-edge (no witness) or a 3-edge with
// witness w_i. Witnesses are distinct and avoid the path.
struct TwoThreePath {
    std::vector<Vertex> vertices;
    std::vector<std::optional<Vertex>> witnesses;  // size max(0, m - 1)

    std::size_t size() const noexcept { return vertices.size(); }
};

PathVerdict validate_23_path(const TwoThreeGraph& f, const TwoThreePath& p);

// Disjoint vertex sets with an O(1) membership lookup.
class Partition {
public:
    // Throws std::invalid_argument if two sets share a vertex.
    Partition(std::span<const VertexSet> sets, std::size_t num_vertices);

    // Index of the set holding v, if any.
    std::optional<std::size_t> part_of(Vertex v) const;
    std::size_t num_parts() const noexcept { return num_parts_; }

private:
    std::vector<std::int32_t> part_;
    std::size_t num_parts_ = 0;
};

// Endpoints in pairwise distinct sets; a vertex outside every set disqualifies.
bool is_transversal(const TwoEdge& e, const Partition& partition);
bool is_transversal(const ThreeEdge& e, const Partition& partition);

struct DfsState {
    enum class Slot : std::uint8_t { outside, pending, path, done, path_witness, done_witness };

    std::vector<Vertex> s;                // S, in the order vertices were retired
    std::vector<Vertex> w_s;              // W_S
    TwoThreePath u;                       // U with its witnesses (W_U)
    std::vector<Slot> slot;               // per vertex
    std::vector<std::uint32_t> set_index; // per vertex: i for v in V_i, else UINT32_MAX
    std::vector<std::size_t> t_size;      // |T_1| .. |T_k|

    std::size_t k() const noexcept { return t_size.size(); }
    std::size_t m() const noexcept { return u.vertices.size(); }
    std::size_t w_u_size() const noexcept;
    bool in_t(Vertex v) const { return slot[v] == Slot::pending; }
    bool in_t(Vertex v, std::size_t i) const { return slot[v] == Slot::pending && set_index[v] == i; }

    VertexSet t(std::size_t i) const;  // T_{i+1}, ascending
    VertexSet w_u() const;             // ascending
};

enum class DfsControl { proceed, stop };

using DfsObserver = std::function<DfsControl(const DfsState&, std::size_t iteration)>;

struct DfsOptions {
    std::vector<Vertex> ordering;  // empty means ascending ids
    bool check_invariants = true;
};

struct DfsResult {
    DfsState state;
    std::size_t iterations = 0;
    bool stopped_by_observer = false;
};

// Depth-first traversal of a (2,3)-graph over disjoint V_1..V_k: grows a
// (2,3)-path U out of T_k, preferring 2-edges and the least vertex in the
// ordering, and retires the path's tail into S when it cannot be extended.
// The observer sees the state after every loop iteration and may stop the run.
DfsResult dfs_traverse(const TwoThreeGraph& f, std::span<const VertexSet> v_sets, const DfsOptions& options = {},
                       const DfsObserver& observer = {});

// Checks that U is a valid (2,3)-path whose witness set is W_U, that S and U lie
// in V_k, that T_i stays inside V_i, and the counting bounds on W_S and W_U.
std::optional<std::string> check_dfs_invariants(const TwoThreeGraph& f, std::span<const VertexSet> v_sets,
                                                const DfsState& state);

// "|S| |W_S| m |W_U| |T_1| .. |T_k|"
std::string dfs_trace_line(const DfsState& state);

enum class ObstructionSizing {
    exact,     // stop when |S| = cn and trim every set to cn
    balanced,  // desk scale: stop when S holds its share of the vertices
};

struct ObstructionOptions {
    ObstructionSizing sizing = ObstructionSizing::exact;
    std::vector<Vertex> ordering;
};

struct ObstructionSets {
    std::vector<VertexSet> sets;
};

using ObstructionResult = std::variant<TwoThreePath, ObstructionSets>;

// Either a (2,3)-path with at least n vertices, or k disjoint sets with no
// transversal edge and no uv(w) with u in V_1..V_{k-1} and v, w in V_k.
// Exact sizing needs |V(f)| >= 5^(k-1) c n and yields sets of size exactly cn.
ObstructionResult extract_obstruction_sets(const TwoThreeGraph& f, std::size_t k, std::size_t c, std::size_t n,
                                           const ObstructionOptions& options = {});

// The two post-conditions of the sets outcome; returns the first violation.
std::optional<std::string> check_obstruction_sets(const TwoThreeGraph& f, std::span<const VertexSet> sets);

void write_two_three_graph(std::ostream& out, const TwoThreeGraph& f);
TwoThreeGraph read_two_three_graph(std::istream& in);

}  // namespace tightpath
