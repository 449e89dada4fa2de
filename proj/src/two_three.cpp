#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "tightpath/two_three.hpp"

namespace tightpath {

TwoThreeGraph::TwoThreeGraph(std::size_t num_vertices) : two_adjacency_(num_vertices), partners_(num_vertices) {}

std::uint64_t TwoThreeGraph::key(Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

void TwoThreeGraph::check(Vertex v) const {
    if (v >= num_vertices()) throw std::invalid_argument("(2,3)-graph vertex out of range");
}

namespace {

bool insert_sorted(std::vector<Vertex>& list, Vertex v) {
    auto it = std::lower_bound(list.begin(), list.end(), v);
    if (it != list.end() && *it == v) return false;
    list.insert(it, v);
    return true;
}

}  // namespace

void TwoThreeGraph::add_partner(Vertex u, Vertex v) {
    insert_sorted(partners_[u], v);
    insert_sorted(partners_[v], u);
}

void TwoThreeGraph::add_two_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    if (u == v) throw std::invalid_argument("2-edge needs distinct endpoints");
    if (insert_sorted(two_adjacency_[u], v)) {
        insert_sorted(two_adjacency_[v], u);
        ++num_two_;
    }
    add_partner(u, v);
}

void TwoThreeGraph::add_three_edge(Vertex u, Vertex v, Vertex w) {
    check(u);
    check(v);
    check(w);
    if (u == v || u == w || v == w) throw std::invalid_argument("3-edge needs three distinct vertices");
    if (insert_sorted(witnesses_[key(u, v)], w)) ++num_three_;
    add_partner(u, v);
}

bool TwoThreeGraph::has_two_edge(Vertex u, Vertex v) const {
    if (u >= num_vertices() || v >= num_vertices()) return false;
    return std::binary_search(two_adjacency_[u].begin(), two_adjacency_[u].end(), v);
}

bool TwoThreeGraph::has_three_edge(Vertex u, Vertex v, Vertex w) const {
    const auto list = witnesses(u, v);
    return std::binary_search(list.begin(), list.end(), w);
}

std::span<const Vertex> TwoThreeGraph::witnesses(Vertex u, Vertex v) const {
    auto it = witnesses_.find(key(u, v));
    if (it == witnesses_.end()) return {};
    return it->second;
}

std::vector<TwoEdge> TwoThreeGraph::two_edges() const {
    std::vector<TwoEdge> out;
    for (Vertex u = 0; u < num_vertices(); ++u) {
        for (Vertex v : two_adjacency_[u]) {
            if (u < v) out.push_back({u, v});
        }
    }
    return out;
}

std::vector<ThreeEdge> TwoThreeGraph::three_edges() const {
    std::vector<ThreeEdge> out;
    for (Vertex u = 0; u < num_vertices(); ++u) {
        for (Vertex v : partners_[u]) {
            if (v <= u) continue;
            for (Vertex w : witnesses(u, v)) out.push_back({u, v, w});
        }
    }
    return out;
}

PathVerdict validate_23_path(const TwoThreeGraph& f, const TwoThreePath& p) {
    const std::size_t m = p.vertices.size();
    if (p.witnesses.size() != (m == 0 ? 0 : m - 1)) return {false, 0, "witness list has the wrong length"};
    std::vector<std::uint8_t> on_path(f.num_vertices(), 0), used(f.num_vertices(), 0);
    for (std::size_t i = 0; i < m; ++i) {
        const Vertex v = p.vertices[i];
        if (v >= f.num_vertices()) return {false, i, "vertex out of range"};
        if (on_path[v]) return {false, i, "vertex " + std::to_string(v) + " repeated"};
        on_path[v] = 1;
    }
    for (std::size_t i = 0; i + 1 < m; ++i) {
        const Vertex a = p.vertices[i], b = p.vertices[i + 1];
        const auto& w = p.witnesses[i];
        if (!w) {
            if (!f.has_two_edge(a, b)) return {false, i, "no 2-edge at step " + std::to_string(i)};
            continue;
        }
        if (*w >= f.num_vertices()) return {false, i, "witness out of range"};
        if (!f.has_three_edge(a, b, *w)) return {false, i, "no 3-edge at step " + std::to_string(i)};
        if (on_path[*w]) return {false, i, "witness " + std::to_string(*w) + " lies on the path"};
        if (used[*w]) return {false, i, "witness " + std::to_string(*w) + " reused"};
        used[*w] = 1;
    }
    return {};
}

Partition::Partition(std::span<const VertexSet> sets, std::size_t num_vertices)
    : part_(num_vertices, -1), num_parts_(sets.size()) {
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (Vertex v : sets[i]) {
            if (v >= num_vertices) throw std::invalid_argument("partition vertex out of range");
            if (part_[v] != -1) throw std::invalid_argument("partition sets overlap at vertex " + std::to_string(v));
            part_[v] = static_cast<std::int32_t>(i);
        }
    }
}

std::optional<std::size_t> Partition::part_of(Vertex v) const {
    if (v >= part_.size() || part_[v] < 0) return std::nullopt;
    return static_cast<std::size_t>(part_[v]);
}

bool is_transversal(const TwoEdge& e, const Partition& partition) {
    const auto a = partition.part_of(e.u), b = partition.part_of(e.v);
    return a && b && *a != *b;
}

bool is_transversal(const ThreeEdge& e, const Partition& partition) {
    const auto a = partition.part_of(e.u), b = partition.part_of(e.v), c = partition.part_of(e.w);
    return a && b && c && *a != *b && *a != *c && *b != *c;
}

void write_two_three_graph(std::ostream& out, const TwoThreeGraph& f) {
    out << "g23 " << f.num_vertices() << '\n';
    for (const auto& e : f.two_edges()) out << "e2 " << e.u << ' ' << e.v << '\n';
    for (const auto& e : f.three_edges()) out << "e3 " << e.u << ' ' << e.v << ' ' << e.w << '\n';
}

TwoThreeGraph read_two_three_graph(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::optional<TwoThreeGraph> f;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::string tag;
        fields >> tag;
        auto fail = [&](const std::string& why) {
            return ParseError("(2,3)-graph line " + std::to_string(line_no) + ": " + why);
        };
        if (!f) {
            std::size_t n = 0;
            if (tag != "g23" || !(fields >> n)) throw fail("expected 'g23 <num_vertices>'");
            f.emplace(n);
            continue;
        }
        try {
            if (tag == "e2") {
                std::uint64_t u = 0, v = 0;
                if (!(fields >> u >> v)) throw fail("malformed 2-edge");
                f->add_two_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
            } else if (tag == "e3") {
                std::uint64_t u = 0, v = 0, w = 0;
                if (!(fields >> u >> v >> w)) throw fail("malformed 3-edge");
                f->add_three_edge(static_cast<Vertex>(u), static_cast<Vertex>(v), static_cast<Vertex>(w));
            } else {
                throw fail("unknown record '" + tag + "'");
            }
        } catch (const std::invalid_argument& e) {
            throw fail(e.what());
        }
    }
    if (!f) throw ParseError("(2,3)-graph: missing header");
    return std::move(*f);
}

}  // namespace tightpath
