#include "tightpath/hypergraph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace tightpath {

Triple Triple::sorted(Vertex x, Vertex y, Vertex z) {
    if (x > y) std::swap(x, y);
    if (y > z) std::swap(y, z);
    if (x > y) std::swap(x, y);
    return {x, y, z};
}

std::uint64_t pack_triple(Vertex x, Vertex y, Vertex z) {
    const Triple t = Triple::sorted(x, y, z);
    return (static_cast<std::uint64_t>(t.a) << 42) | (static_cast<std::uint64_t>(t.b) << 21) | t.c;
}

Hypergraph3::Hypergraph3(std::size_t num_vertices, std::vector<Triple> triples, std::vector<Vertex> cluster_map)
    : num_vertices_(num_vertices), triples_(std::move(triples)), cluster_map_(std::move(cluster_map)) {
    if (num_vertices_ > kMaxHypergraphVertices) throw std::invalid_argument("hypergraph exceeds 2^21 vertices");
    if (!cluster_map_.empty() && cluster_map_.size() != num_vertices_) {
        throw std::invalid_argument("cluster map size does not match vertex count");
    }
    for (Triple& t : triples_) {
        t = Triple::sorted(t.a, t.b, t.c);
        if (t.a == t.b || t.b == t.c) throw std::invalid_argument("triple with repeated vertex");
        if (t.c >= num_vertices_) throw std::invalid_argument("triple vertex out of range");
    }
    std::sort(triples_.begin(), triples_.end());
    if (std::adjacent_find(triples_.begin(), triples_.end()) != triples_.end()) {
        throw std::invalid_argument("duplicate triple");
    }
    index_.reserve(triples_.size());
    for (std::size_t i = 0; i < triples_.size(); ++i) {
        index_.emplace(pack_triple(triples_[i].a, triples_[i].b, triples_[i].c), static_cast<std::uint32_t>(i));
    }
}

std::optional<std::size_t> Hypergraph3::index_of(Vertex x, Vertex y, Vertex z) const {
    if (x == y || y == z || x == z) return std::nullopt;
    if (x >= num_vertices_ || y >= num_vertices_ || z >= num_vertices_) return std::nullopt;
    auto it = index_.find(pack_triple(x, y, z));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

TwoColoring::TwoColoring(const Hypergraph3& host, Colour fill) : colours_(host.num_triples(), fill) {}

TwoColoring::TwoColoring(const Hypergraph3& host, std::vector<Colour> colours) : colours_(std::move(colours)) {
    if (colours_.size() != host.num_triples()) {
        throw std::invalid_argument("colouring size does not match the host's triple count");
    }
}

TwoColoring TwoColoring::swapped() const {
    TwoColoring out = *this;
    for (Colour& c : out.colours_) c = opposite(c);
    return out;
}

ColouredView::ColouredView(const Hypergraph3& h, const TwoColoring& c) : h_(&h), c_(&c) {
    if (c.size() != h.num_triples()) throw std::invalid_argument("colouring does not belong to this hypergraph");
}

std::optional<Colour> ColouredView::colour(Vertex x, Vertex y, Vertex z) const {
    auto idx = h_->index_of(x, y, z);
    if (!idx) return std::nullopt;
    return c_->at(*idx);
}

bool ColouredView::is(Vertex x, Vertex y, Vertex z, Colour want) const {
    auto got = colour(x, y, z);
    return got && *got == want;
}

Hypergraph3 triangles_to_hypergraph(const Graph& g, std::vector<Vertex> cluster_map) {
    std::vector<Triple> triples;
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
        const auto nu = g.neighbours(u);
        for (Vertex v : nu) {
            if (v <= u) continue;
            const auto nv = g.neighbours(v);
            // common neighbours w > v
            auto i = std::upper_bound(nu.begin(), nu.end(), v);
            auto j = std::upper_bound(nv.begin(), nv.end(), v);
            while (i != nu.end() && j != nv.end()) {
                if (*i < *j) {
                    ++i;
                } else if (*j < *i) {
                    ++j;
                } else {
                    triples.push_back({u, v, *i});
                    ++i;
                    ++j;
                }
            }
        }
    }
    return Hypergraph3(g.num_vertices(), std::move(triples), std::move(cluster_map));
}

PathVerdict validate_tight_path(const Hypergraph3& h, const TwoColoring& c, const TightPath3& p, Colour colour) {
    ColouredView view(h, c);
    std::vector<std::uint8_t> seen(h.num_vertices(), 0);
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        const Vertex v = p.vertices[i];
        if (v >= h.num_vertices()) return {false, i, "vertex " + std::to_string(v) + " out of range"};
        if (seen[v]) return {false, i, "vertex " + std::to_string(v) + " repeated"};
        seen[v] = 1;
    }
    for (std::size_t i = 0; i + 2 < p.vertices.size(); ++i) {
        const auto got = view.colour(p.vertices[i], p.vertices[i + 1], p.vertices[i + 2]);
        if (!got) return {false, i, "window at " + std::to_string(i) + " is not a triple"};
        if (*got != colour) return {false, i, "window at " + std::to_string(i) + " is " + colour_name(*got)};
    }
    return {};
}

namespace {

struct CliqueSearch {
    const ColouredView& view;
    std::span<const Vertex> cluster;
    std::size_t t;
    Colour colour;
    std::vector<Vertex> chosen;

    bool extend(std::size_t from) {
        if (chosen.size() == t) return true;
        for (std::size_t i = from; i + (t - chosen.size()) <= cluster.size(); ++i) {
            const Vertex x = cluster[i];
            bool fits = true;
            for (std::size_t a = 0; a < chosen.size() && fits; ++a) {
                for (std::size_t b = a + 1; b < chosen.size() && fits; ++b) {
                    fits = view.is(chosen[a], chosen[b], x, colour);
                }
            }
            if (!fits) continue;
            chosen.push_back(x);
            if (extend(i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    }
};

}  // namespace

std::optional<MonoClique> find_mono_clique_of_colour(const Hypergraph3& h, const TwoColoring& c,
                                                     std::span<const Vertex> cluster, std::size_t t,
                                                     Colour colour) {
    if (t > cluster.size()) return std::nullopt;
    ColouredView view(h, c);
    CliqueSearch search{view, cluster, t, colour, {}};
    if (!search.extend(0)) return std::nullopt;
    return MonoClique{colour, std::move(search.chosen)};
}

std::optional<MonoClique> find_mono_clique(const Hypergraph3& h, const TwoColoring& c,
                                           std::span<const Vertex> cluster, std::size_t t) {
    auto blue = find_mono_clique_of_colour(h, c, cluster, t, Colour::blue);
    auto red = find_mono_clique_of_colour(h, c, cluster, t, Colour::red);
    if (!blue) return red;
    if (!red) return blue;
    auto position = [&](Vertex v) { return std::find(cluster.begin(), cluster.end(), v) - cluster.begin(); };
    for (std::size_t i = 0; i < t; ++i) {
        const auto pb = position(blue->vertices[i]);
        const auto pr = position(red->vertices[i]);
        if (pr < pb) return red;
        if (pb < pr) return blue;
    }
    return blue;
}

LongestPath brute_force_longest_mono_tight_path(const Hypergraph3& h, const TwoColoring& c, std::size_t cap) {
    const std::size_t n = h.num_vertices();
    if (n > 64) throw std::invalid_argument("brute-force oracle limited to 64 vertices");
    LongestPath best;
    best.colour = Colour::blue;
    if (n == 0 || cap == 0) return best;
    best.path.vertices = {0};
    if (n == 1 || cap == 1) return best;
    best.path.vertices = {0, 1};
    const std::size_t limit = std::min(cap, n);
    if (limit <= 2) return best;

    // ok[colour][x][y] = bitmask of z with {x, y, z} in that colour
    std::vector<std::uint64_t> ok(2 * n * n, 0);
    ColouredView view(h, c);
    for (std::size_t i = 0; i < h.num_triples(); ++i) {
        const Triple& t = h.triple(i);
        const std::size_t col = static_cast<std::size_t>(c.at(i));
        const std::array<Vertex, 3> v{t.a, t.b, t.c};
        for (int p = 0; p < 3; ++p) {
            for (int q = 0; q < 3; ++q) {
                if (p == q) continue;
                const Vertex z = v[3 - p - q];
                ok[(col * n + v[p]) * n + v[q]] |= std::uint64_t{1} << z;
            }
        }
    }

    std::vector<Vertex> path;
    std::vector<Vertex> longest;
    Colour longest_colour = Colour::blue;
    bool done = false;
    for (Colour colour : {Colour::blue, Colour::red}) {
        const std::size_t col = static_cast<std::size_t>(colour);
        auto dfs = [&](auto&& self, std::uint64_t used) -> void {
            if (path.size() > longest.size()) {
                longest = path;
                longest_colour = colour;
                if (longest.size() >= limit) done = true;
            }
            if (done) return;
            const Vertex x = path[path.size() - 2], y = path.back();
            std::uint64_t options = ok[(col * n + x) * n + y] & ~used;
            while (options && !done) {
                const Vertex z = static_cast<Vertex>(__builtin_ctzll(options));
                options &= options - 1;
                path.push_back(z);
                self(self, used | (std::uint64_t{1} << z));
                path.pop_back();
            }
        };
        for (Vertex x = 0; x < n && !done; ++x) {
            for (Vertex y = 0; y < n && !done; ++y) {
                if (x == y) continue;
                path = {x, y};
                dfs(dfs, (std::uint64_t{1} << x) | (std::uint64_t{1} << y));
            }
        }
        if (done) break;
    }
    best.colour = longest.size() >= 3 ? longest_colour : Colour::blue;
    best.path.vertices = longest;
    return best;
}

LiftedPath lift_to_r_uniform(const TightPath3& p, std::size_t r) {
    if (r == 0 || r % 3 != 0) throw std::invalid_argument("lift_to_r_uniform: r must be a positive multiple of 3");
    const std::size_t block = r / 3;
    LiftedPath out;
    out.uniformity = r;
    out.overlap = 2 * r / 3;
    for (Vertex v : p.vertices) {
        for (std::size_t j = 0; j < block; ++j) out.order.push_back(static_cast<Vertex>(v * block + j));
    }
    for (std::size_t i = 0; i + 2 < p.vertices.size(); ++i) {
        out.edges.emplace_back(out.order.begin() + static_cast<std::ptrdiff_t>(i * block),
                               out.order.begin() + static_cast<std::ptrdiff_t>((i + 3) * block));
    }
    return out;
}

PathVerdict validate_lifted_path(const LiftedPath& p) {
    std::vector<Vertex> sorted = p.order;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return {false, 0, "repeated vertex"};
    if (p.edges.empty()) return {};
    const std::size_t step = p.uniformity - p.overlap;
    std::vector<std::uint8_t> covered(p.order.size(), 0);
    for (std::size_t e = 0; e < p.edges.size(); ++e) {
        const auto& edge = p.edges[e];
        if (edge.size() != p.uniformity) return {false, e, "edge has wrong size"};
        const std::size_t start = e * step;
        if (start + p.uniformity > p.order.size()) return {false, e, "edge runs past the vertex order"};
        for (std::size_t j = 0; j < p.uniformity; ++j) {
            if (edge[j] != p.order[start + j]) return {false, e, "edge is not a consecutive block"};
            covered[start + j] = 1;
        }
    }
    if (std::find(covered.begin(), covered.end(), 0) != covered.end()) return {false, 0, "uncovered vertex"};
    return {};
}

void write_hypergraph(std::ostream& out, const Hypergraph3& h) {
    out << "h3 " << h.num_vertices() << '\n';
    for (const Triple& t : h.triples()) out << t.a << ' ' << t.b << ' ' << t.c << '\n';
}

Hypergraph3 read_hypergraph(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::optional<std::size_t> n;
    std::vector<Triple> triples;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        if (!n) {
            std::string tag;
            std::size_t count = 0;
            if (!(fields >> tag >> count) || tag != "h3") {
                throw ParseError("hypergraph line " + std::to_string(line_no) + ": expected 'h3 <num_vertices>'");
            }
            n = count;
            continue;
        }
        std::uint64_t a = 0, b = 0, c = 0;
        if (!(fields >> a >> b >> c)) throw ParseError("hypergraph line " + std::to_string(line_no) + ": malformed");
        if (a >= *n || b >= *n || c >= *n) {
            throw ParseError("hypergraph line " + std::to_string(line_no) + ": vertex out of range");
        }
        triples.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b), static_cast<Vertex>(c)});
    }
    if (!n) throw ParseError("hypergraph: missing header");
    try {
        return Hypergraph3(*n, std::move(triples));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("hypergraph: ") + e.what());
    }
}

void write_colouring(std::ostream& out, const Hypergraph3& h, const TwoColoring& c) {
    if (c.size() != h.num_triples()) throw std::invalid_argument("colouring does not belong to this hypergraph");
    for (std::size_t i = 0; i < h.num_triples(); ++i) {
        const Triple& t = h.triple(i);
        out << t.a << ' ' << t.b << ' ' << t.c << ' ' << colour_char(c.at(i)) << '\n';
    }
}

TwoColoring read_colouring(std::istream& in, const Hypergraph3& host) {
    std::vector<Colour> colours(host.num_triples(), Colour::blue);
    std::vector<std::uint8_t> seen(host.num_triples(), 0);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::uint64_t a = 0, b = 0, c = 0;
        std::string tag;
        if (!(fields >> a >> b >> c >> tag)) {
            throw ParseError("colouring line " + std::to_string(line_no) + ": malformed");
        }
        auto idx = host.index_of(static_cast<Vertex>(a), static_cast<Vertex>(b), static_cast<Vertex>(c));
        if (!idx) throw ParseError("colouring line " + std::to_string(line_no) + ": triple not in host");
        if (seen[*idx]) throw ParseError("colouring line " + std::to_string(line_no) + ": triple coloured twice");
        seen[*idx] = 1;
        colours[*idx] = parse_colour(tag);
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
        throw ParseError("colouring: not every host triple is coloured");
    }
    return TwoColoring(host, std::move(colours));
}

void write_tight_path(std::ostream& out, const TightPath3& p, Colour colour) {
    out << "tight_path " << colour_char(colour) << ' ' << p.vertices.size() << '\n';
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        out << (i ? " " : "") << p.vertices[i];
    }
    out << '\n';
}

std::pair<TightPath3, Colour> read_tight_path(std::istream& in) {
    std::string tag, colour;
    std::size_t count = 0;
    if (!(in >> tag >> colour >> count) || tag != "tight_path") {
        throw ParseError("path: expected 'tight_path <R|B> <count>'");
    }
    TightPath3 p;
    p.vertices.resize(count);
    for (auto& v : p.vertices) {
        if (!(in >> v)) throw ParseError("path: fewer vertices than declared");
    }
    return {std::move(p), parse_colour(colour)};
}

}  // namespace tightpath
