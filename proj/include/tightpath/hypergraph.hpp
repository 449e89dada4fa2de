#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "tightpath/graph.hpp"
#include "tightpath/types.hpp"

namespace tightpath {

// Unordered 3-set stored sorted: a < b < c.
struct Triple {
    Vertex a = 0, b = 0, c = 0;

    static Triple sorted(Vertex x, Vertex y, Vertex z);
    friend auto operator<=>(const Triple&, const Triple&) = default;
};

// Vertex ids use 21 bits each, so instances are capped at 2^21 vertices.
inline constexpr std::size_t kMaxHypergraphVertices = std::size_t{1} << 21;

std::uint64_t pack_triple(Vertex x, Vertex y, Vertex z);

class Hypergraph3 {
public:
    Hypergraph3() = default;
    Hypergraph3(std::size_t num_vertices, std::vector<Triple> triples, std::vector<Vertex> cluster_map = {});

    std::size_t num_vertices() const noexcept { return num_vertices_; }
    std::size_t num_triples() const noexcept { return triples_.size(); }
    std::span<const Triple> triples() const noexcept { return triples_; }
    const Triple& triple(std::size_t index) const { return triples_.at(index); }

    // Index into triples() of {x, y, z}, if present (any argument order).
    std::optional<std::size_t> index_of(Vertex x, Vertex y, Vertex z) const;
    bool contains(Vertex x, Vertex y, Vertex z) const { return index_of(x, y, z).has_value(); }

    const std::vector<Vertex>& cluster_map() const noexcept { return cluster_map_; }

private:
    std::size_t num_vertices_ = 0;
    std::vector<Triple> triples_;  // lexicographically sorted
    std::unordered_map<std::uint64_t, std::uint32_t> index_;
    std::vector<Vertex> cluster_map_;
};

// Red/blue value for every triple of one host hypergraph, indexed like
// Hypergraph3::triples().
class TwoColoring {
public:
    TwoColoring() = default;
    TwoColoring(const Hypergraph3& host, Colour fill);
    TwoColoring(const Hypergraph3& host, std::vector<Colour> colours);

    std::size_t size() const noexcept { return colours_.size(); }
    Colour at(std::size_t index) const { return colours_.at(index); }
    void set(std::size_t index, Colour c) { colours_.at(index) = c; }
    const std::vector<Colour>& colours() const noexcept { return colours_; }

    TwoColoring swapped() const;

private:
    std::vector<Colour> colours_;
};

// Borrowed (hypergraph, colouring) pair with the lookups every search uses.
class ColouredView {
public:
    ColouredView(const Hypergraph3& h, const TwoColoring& c);

    const Hypergraph3& hypergraph() const noexcept { return *h_; }
    std::optional<Colour> colour(Vertex x, Vertex y, Vertex z) const;
    // Triple present and carrying `want`.
    bool is(Vertex x, Vertex y, Vertex z, Colour want) const;

private:
    const Hypergraph3* h_;
    const TwoColoring* c_;
};

struct TightPath3 {
    std::vector<Vertex> vertices;

    std::size_t size() const noexcept { return vertices.size(); }
    friend bool operator==(const TightPath3&, const TightPath3&) = default;
};

struct PathVerdict {
    bool ok = true;
    std::size_t position = 0;  // first offending index (window start for window failures)
    std::string reason;

    explicit operator bool() const noexcept { return ok; }
};

// All triangles of g, each reported once. Carries the blow-up cluster map if given.
Hypergraph3 triangles_to_hypergraph(const Graph& g, std::vector<Vertex> cluster_map = {});

// Distinct vertices, every window {p_i, p_i+1, p_i+2} a triple of h coloured
// `colour`. Sequences with fewer than three vertices have no windows and pass
// when distinct: a pair (u, v) counts as a tight path with two vertices.
PathVerdict validate_tight_path(const Hypergraph3& h, const TwoColoring& c, const TightPath3& p, Colour colour);

struct MonoClique {
    Colour colour = Colour::blue;
    VertexSet vertices;  // in cluster order
};

// Lexicographically least (by position in `cluster`) t-subset all of whose
// triples exist and have colour `colour`.
std::optional<MonoClique> find_mono_clique_of_colour(const Hypergraph3& h, const TwoColoring& c,
                                                     std::span<const Vertex> cluster, std::size_t t,
                                                     Colour colour);

// Least monochromatic t-subset over both colours; blue wins a tie, which can
// only occur for t <= 2.
std::optional<MonoClique> find_mono_clique(const Hypergraph3& h, const TwoColoring& c,
                                           std::span<const Vertex> cluster, std::size_t t);

struct LongestPath {
    Colour colour = Colour::blue;
    TightPath3 path;
};

// Exhaustive search over vertex sequences for a longest monochromatic tight
// path, stopping early at `cap` vertices. Intended for at most ~15 vertices.
LongestPath brute_force_longest_mono_tight_path(const Hypergraph3& h, const TwoColoring& c, std::size_t cap);

// r-uniform path with consecutive edges sharing 2r/3 vertices.
struct LiftedPath {
    std::size_t uniformity = 3;
    std::size_t overlap = 2;
    std::vector<Vertex> order;
    std::vector<std::vector<Vertex>> edges;
};

// Replaces vertex v by the block v*(r/3) .. v*(r/3) + r/3 - 1.
LiftedPath lift_to_r_uniform(const TightPath3& p, std::size_t r);

// Each edge is `uniformity` consecutive vertices of `order`, consecutive edges
// share exactly `overlap` vertices and every vertex lies in some edge.
PathVerdict validate_lifted_path(const LiftedPath& p);

void write_hypergraph(std::ostream& out, const Hypergraph3& h);
Hypergraph3 read_hypergraph(std::istream& in);

void write_colouring(std::ostream& out, const Hypergraph3& h, const TwoColoring& c);
// Every triple of `host` must be coloured exactly once; unknown triples are rejected.
TwoColoring read_colouring(std::istream& in, const Hypergraph3& host);

void write_tight_path(std::ostream& out, const TightPath3& p, Colour colour);
std::pair<TightPath3, Colour> read_tight_path(std::istream& in);

}  // namespace tightpath
