#include "tightpath/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace tightpath {

Graph::Graph(std::size_t num_vertices) : adjacency_(num_vertices) {}

Graph Graph::from_edges(std::size_t num_vertices, std::span<const Edge> edges) {
    Graph g(num_vertices);
    for (auto [u, v] : edges) {
        if (u >= num_vertices || v >= num_vertices) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    std::size_t twice = 0;
    for (auto& list : g.adjacency_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        twice += list.size();
    }
    g.num_edges_ = twice / 2;
    return g;
}

std::size_t Graph::max_degree() const noexcept {
    std::size_t best = 0;
    for (const auto& list : adjacency_) best = std::max(best, list.size());
    return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u >= num_vertices() || v >= num_vertices()) return false;
    const auto& list = adjacency_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

std::optional<std::size_t> Graph::regular_degree() const noexcept {
    if (adjacency_.empty()) return std::nullopt;
    const std::size_t d = adjacency_.front().size();
    for (const auto& list : adjacency_) {
        if (list.size() != d) return std::nullopt;
    }
    return d;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges_);
    for (Vertex u = 0; u < num_vertices(); ++u) {
        for (Vertex v : adjacency_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

Graph Graph::with_labels(std::vector<std::uint32_t> labels) const {
    if (!labels.empty() && labels.size() != num_vertices()) {
        throw std::invalid_argument("label vector size does not match vertex count");
    }
    Graph copy = *this;
    copy.labels_ = std::move(labels);
    return copy;
}

Graph Graph::with_degree_bound(std::size_t bound) const {
    if (max_degree() > bound) throw std::invalid_argument("graph exceeds declared degree bound");
    Graph copy = *this;
    copy.degree_bound_ = bound;
    return copy;
}

std::size_t edge_count_between(const Graph& g, std::span<const Vertex> s, std::span<const Vertex> t) {
    std::vector<std::uint8_t> mark(g.num_vertices(), 0);
    for (Vertex v : t) {
        if (v >= g.num_vertices()) throw std::invalid_argument("vertex out of range");
        mark[v] = 1;
    }
    for (Vertex v : s) {
        if (v >= g.num_vertices()) throw std::invalid_argument("vertex out of range");
        if (mark[v] == 1) throw std::invalid_argument("edge_count_between: sets overlap");
    }
    std::size_t count = 0;
    for (Vertex u : s) {
        for (Vertex w : g.neighbours(u)) count += mark[w];
    }
    return count;
}

Graph graph_power(const Graph& g, std::size_t k) {
    if (k == 0) throw std::invalid_argument("graph_power: k must be at least 1");
    const std::size_t n = g.num_vertices();
    std::vector<Edge> edges;
    std::vector<std::size_t> dist(n, SIZE_MAX);
    std::vector<Vertex> frontier;
    std::vector<Vertex> touched;
    for (Vertex s = 0; s < n; ++s) {
        dist[s] = 0;
        touched.assign(1, s);
        frontier.assign(1, s);
        for (std::size_t depth = 1; depth <= k && !frontier.empty(); ++depth) {
            std::vector<Vertex> next;
            for (Vertex u : frontier) {
                for (Vertex w : g.neighbours(u)) {
                    if (dist[w] != SIZE_MAX) continue;
                    dist[w] = depth;
                    touched.push_back(w);
                    next.push_back(w);
                    if (s < w) edges.emplace_back(s, w);
                }
            }
            frontier = std::move(next);
        }
        for (Vertex v : touched) dist[v] = SIZE_MAX;
    }
    return Graph::from_edges(n, edges);
}

VertexSet BlowUp::cluster(Vertex origin) const {
    VertexSet out(cluster_size);
    for (std::size_t i = 0; i < cluster_size; ++i) {
        out[i] = static_cast<Vertex>(origin * cluster_size + i);
    }
    return out;
}

BlowUp blow_up(const Graph& g, std::size_t t) {
    if (t == 0) throw std::invalid_argument("blow_up: t must be at least 1");
    const std::size_t n = g.num_vertices();
    std::vector<Edge> edges;
    edges.reserve(n * t * (t - 1) / 2 + g.num_edges() * t * t);
    for (Vertex v = 0; v < n; ++v) {
        for (std::size_t i = 0; i < t; ++i) {
            for (std::size_t j = i + 1; j < t; ++j) {
                edges.emplace_back(static_cast<Vertex>(v * t + i), static_cast<Vertex>(v * t + j));
            }
        }
    }
    for (auto [u, v] : g.edges()) {
        for (std::size_t i = 0; i < t; ++i) {
            for (std::size_t j = 0; j < t; ++j) {
                edges.emplace_back(static_cast<Vertex>(u * t + i), static_cast<Vertex>(v * t + j));
            }
        }
    }
    BlowUp out;
    out.graph = Graph::from_edges(n * t, edges);
    out.cluster_size = t;
    out.cluster_map.resize(n * t);
    for (std::size_t x = 0; x < n * t; ++x) out.cluster_map[x] = static_cast<Vertex>(x / t);
    return out;
}

Graph contract(const Graph& g, std::span<const Vertex> class_of, std::size_t num_classes) {
    if (class_of.size() != g.num_vertices()) throw std::invalid_argument("contract: class map size mismatch");
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        if (class_of[u] != class_of[v]) edges.emplace_back(class_of[u], class_of[v]);
    }
    return Graph::from_edges(num_classes, edges);
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    InducedSubgraph out;
    out.to_parent.assign(vertices.begin(), vertices.end());
    std::sort(out.to_parent.begin(), out.to_parent.end());
    out.to_parent.erase(std::unique(out.to_parent.begin(), out.to_parent.end()), out.to_parent.end());
    std::vector<std::int64_t> local(g.num_vertices(), -1);
    for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
        if (out.to_parent[i] >= g.num_vertices()) throw std::invalid_argument("vertex out of range");
        local[out.to_parent[i]] = static_cast<std::int64_t>(i);
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
        for (Vertex w : g.neighbours(out.to_parent[i])) {
            if (local[w] > static_cast<std::int64_t>(i)) {
                edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(local[w]));
            }
        }
    }
    out.graph = Graph::from_edges(out.to_parent.size(), edges);
    return out;
}

Graph cycle_power(std::size_t n, std::size_t r) {
    if (n < 3) throw std::invalid_argument("cycle_power: need at least 3 vertices");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t step = 1; step <= r; ++step) {
            const std::size_t j = (i + step) % n;
            if (i != j) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    }
    return Graph::from_edges(n, edges);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << "graph " << g.num_vertices() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    if (g.has_labels()) {
        for (std::size_t v = 0; v < g.num_vertices(); ++v) {
            out << "label " << v << ' ' << g.labels()[v] << '\n';
        }
    }
}

Graph read_graph(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    auto fail = [&](const std::string& why) -> ParseError {
        return ParseError("graph line " + std::to_string(line_no) + ": " + why);
    };
    std::optional<std::size_t> n;
    std::vector<Edge> edges;
    std::vector<std::uint32_t> labels;
    std::vector<std::uint8_t> labelled;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        if (!n) {
            std::string tag;
            std::size_t count = 0;
            if (!(fields >> tag >> count) || tag != "graph") throw fail("expected 'graph <num_vertices>'");
            n = count;
            continue;
        }
        if (line.rfind("label", 0) == 0) {
            std::string tag;
            std::uint64_t v = 0, c = 0;
            if (!(fields >> tag >> v >> c)) throw fail("malformed label line");
            if (v >= *n) throw fail("label vertex out of range");
            if (labels.empty()) {
                labels.assign(*n, 0);
                labelled.assign(*n, 0);
            }
            labels[v] = static_cast<std::uint32_t>(c);
            labelled[v] = 1;
            continue;
        }
        std::uint64_t u = 0, v = 0;
        if (!(fields >> u >> v)) throw fail("malformed edge line");
        std::string extra;
        if (fields >> extra) throw fail("trailing content");
        if (u >= *n || v >= *n) throw fail("edge endpoint out of range");
        if (u == v) throw fail("self-loop");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (!n) throw ParseError("graph: missing header");
    Graph g = Graph::from_edges(*n, edges);
    if (!labels.empty()) {
        if (std::find(labelled.begin(), labelled.end(), 0) != labelled.end()) {
            throw ParseError("graph: labels must cover every vertex");
        }
        g = g.with_labels(std::move(labels));
    }
    return g;
}

}  // namespace tightpath
