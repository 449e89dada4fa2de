#pragma once

// Random instances for property tests.

#include <algorithm>
#include <vector>

#include "tightpath/graph.hpp"
#include "tightpath/hypergraph.hpp"
#include "tightpath/two_three.hpp"

namespace gen {

using tightpath::Rng;
using tightpath::Vertex;
using tightpath::VertexSet;

inline tightpath::Graph random_graph(Rng& rng, std::size_t n, double p) {
    std::vector<tightpath::Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (tightpath::uniform_unit(rng) < p) edges.emplace_back(u, v);
    return tightpath::Graph::from_edges(n, edges);
}

// Random disjoint sets covering a random share of 0..n-1, each non-empty when possible.
inline std::vector<VertexSet> random_partition(Rng& rng, std::size_t n, std::size_t parts, double cover = 1.0) {
    std::vector<Vertex> pool(n);
    for (Vertex v = 0; v < n; ++v) pool[v] = v;
    tightpath::shuffle(pool, rng);
    std::vector<VertexSet> sets(parts);
    for (std::size_t i = 0; i < pool.size(); ++i) {
        if (i >= parts && tightpath::uniform_unit(rng) >= cover) continue;
        sets[i < parts ? i : tightpath::uniform_below(rng, parts)].push_back(pool[i]);
    }
    for (auto& s : sets) std::sort(s.begin(), s.end());
    return sets;
}

// 2-edges with probability p2 per pair; 3-edges with a random witness, `per_vertex` expected per vertex.
inline tightpath::TwoThreeGraph random_two_three(Rng& rng, std::size_t n, double p2, double three_per_vertex) {
    tightpath::TwoThreeGraph f(n);
    if (n < 3) return f;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (tightpath::uniform_unit(rng) < p2) f.add_two_edge(u, v);
    const auto threes = static_cast<std::size_t>(three_per_vertex * static_cast<double>(n));
    for (std::size_t i = 0; i < threes; ++i) {
        const auto u = static_cast<Vertex>(tightpath::uniform_below(rng, n));
        const auto v = static_cast<Vertex>(tightpath::uniform_below(rng, n));
        const auto w = static_cast<Vertex>(tightpath::uniform_below(rng, n));
        if (u != v && v != w && u != w) f.add_three_edge(u, v, w);
    }
    return f;
}

// Complete 3-graph on n vertices.
inline tightpath::Hypergraph3 complete_3graph(std::size_t n, std::vector<Vertex> cluster_map = {}) {
    std::vector<tightpath::Triple> triples;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c) triples.push_back({a, b, c});
    return tightpath::Hypergraph3(n, std::move(triples), std::move(cluster_map));
}

inline tightpath::TwoColoring random_colouring(Rng& rng, const tightpath::Hypergraph3& h, double p_blue) {
    std::vector<tightpath::Colour> colours(h.num_triples());
    for (auto& c : colours)
        c = tightpath::uniform_unit(rng) < p_blue ? tightpath::Colour::blue : tightpath::Colour::red;
    return tightpath::TwoColoring(h, std::move(colours));
}

}  // namespace gen
