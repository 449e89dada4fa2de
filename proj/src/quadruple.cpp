#include <algorithm>
#include <array>
#include <unordered_map>
#include <unordered_set>

#include "tightpath/extraction.hpp"

namespace tightpath {

namespace {

const VertexSet& family_cluster(const ClusterFamily& family, Vertex v, std::size_t step) {
    if (v >= family.clusters.size() || family.clusters[v].empty()) {
        throw std::invalid_argument("blue conversion: step " + std::to_string(step) + " touches a vertex without cluster");
    }
    return family.clusters[v];
}

void erase_vertices(VertexSet& set, std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) {
        auto it = std::find(set.begin(), set.end(), v);
        if (it == set.end()) throw HardFault("pruning: connector vertex missing from its cluster");
        set.erase(it);
    }
}

}  // namespace

TightPath3 blue_path_from_23path(const TwoThreePath& f_path, const ClusterFamily& family, const Hypergraph3& h,
                                 const TwoColoring& c) {
    const std::size_t m = f_path.size();
    if (m == 0) return {};
    if (f_path.witnesses.size() != m - 1) throw std::invalid_argument("blue conversion: witness list has the wrong length");
    if (m == 1) {
        // Any ordering of a role clique is a role-coloured tight path.
        return {family_cluster(family, f_path.vertices[0], 0)};
    }

    std::unordered_set<Vertex> used;
    std::vector<Vertex> out;
    for (std::size_t i = 0; i + 1 < m; ++i) {
        const Vertex u = f_path.vertices[i], v = f_path.vertices[i + 1];
        const auto& w = f_path.witnesses[i];
        const auto& cu = family_cluster(family, u, i);
        const auto& cv = family_cluster(family, v, i);
        std::optional<Connector> gadgets;
        if (w) {
            gadgets = find_disjoint_triple(h, c, family.role, ConnectorKind::c636, cu, cv, family_cluster(family, *w, i));
        } else {
            gadgets = find_disjoint_triple(h, c, family.role, ConnectorKind::c66, cu, cv);
        }
        if (!gadgets) {
            throw std::invalid_argument("blue conversion: no " + std::string(w ? "c636" : "c66") + " for step " +
                                        std::to_string(i));
        }
        const Gadget* pick = nullptr;
        for (const auto& g : gadgets->parts) {
            const auto vs = g.vertices();
            if (std::none_of(vs.begin(), vs.end(), [&](Vertex x) { return used.count(x) > 0; })) {
                pick = &g;
                break;
            }
        }
        if (!pick) throw HardFault("blue conversion: all three gadgets of step " + std::to_string(i) + " are blocked");
        for (Vertex x : pick->vertices()) used.insert(x);
        // x2 x1 [z] y1 y2; the previous y1 y2 and this x2 x1 share a cluster,
        // so the windows y1 y2 x2 and y2 x2 x1 are role-coloured clique triples.
        out.push_back(pick->x2);
        out.push_back(pick->x1);
        if (pick->z) out.push_back(*pick->z);
        out.push_back(pick->y1);
        out.push_back(pick->y2);
    }
    TightPath3 path{std::move(out)};
    if (auto verdict = validate_tight_path(h, c, path, family.role); !verdict) {
        throw HardFault("blue conversion produced an invalid path: " + verdict.reason);
    }
    return path;
}

PrunedClusters power_path_and_prune(std::span<const VertexSet> clusters, std::size_t k, const Hypergraph3& h,
                                    const TwoColoring& c, Colour role) {
    if (k == 0) throw std::invalid_argument("power_path_and_prune: k must be positive");
    PrunedClusters out{{clusters.begin(), clusters.end()}, {}};
    auto& hs = out.clusters;
    const std::size_t m = hs.size();

    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m && j <= i + k; ++j) {
            std::size_t removed = 0;
            while (auto conn = find_c22(h, c, role, hs[i], hs[j])) {
                if (++removed > 2) {
                    throw HardFault("pruning: three disjoint c22 between positions " + std::to_string(i) + " and " +
                                    std::to_string(j));
                }
                const Gadget& g = conn->parts[0];
                erase_vertices(hs[i], {g.x1, g.x2});
                erase_vertices(hs[j], {g.y1, g.y2});
                out.audit.push_back({ConnectorKind::c22, {i, j}, *conn});
            }
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m && j < i + k; ++j) {
            for (std::size_t l = j + 1; l < m && l <= i + k; ++l) {
                const std::array<std::array<std::size_t, 3>, 3> layouts{{{j, l, i}, {i, l, j}, {i, j, l}}};
                for (const auto& [a, b, mid] : layouts) {
                    std::size_t removed = 0;
                    while (auto conn = find_c212(h, c, role, hs[a], hs[b], hs[mid])) {
                        if (++removed > 2) {
                            throw HardFault("pruning: three disjoint c212 among positions " + std::to_string(a) + ", " +
                                            std::to_string(b) + " through " + std::to_string(mid));
                        }
                        const Gadget& g = conn->parts[0];
                        erase_vertices(hs[a], {g.x1, g.x2});
                        erase_vertices(hs[b], {g.y1, g.y2});
                        erase_vertices(hs[mid], {*g.z});
                        out.audit.push_back({ConnectorKind::c212, {a, b, mid}, *conn});
                    }
                }
            }
        }
    }
    return out;
}

Quadruple base_quadruple(std::span<const VertexSet> clusters) {
    if (clusters.size() < 2 || clusters[0].size() < 2 || clusters[1].size() < 2) {
        throw std::invalid_argument("base_quadruple: the first two clusters need two vertices each");
    }
    Quadruple q;
    q.level = 1;
    q.u1 = clusters[0][0];
    q.u2 = clusters[0][1];
    q.w1 = clusters[1][0];
    q.w2 = clusters[1][1];
    q.cluster_u = 0;
    q.cluster_w = 1;
    q.path_u = {q.u1, q.u2};
    q.path_w = {q.w1, q.w2};
    q.step = "base";
    return q;
}

std::optional<std::string> check_quadruple(const Quadruple& q, std::span<const VertexSet> clusters, std::size_t ell,
                                           const Hypergraph3& h, const TwoColoring& c, Colour colour) {
    if (q.level == 0 || ell == 0) return "level and window width must be positive";
    const std::size_t lo = (q.level - 1) * ell, hi = q.level * ell;
    if (hi > clusters.size()) return "window " + std::to_string(q.level) + " runs past the cluster list";
    if (q.cluster_u == q.cluster_w) return "end-tuples share a cluster";
    for (std::size_t pos : {q.cluster_u, q.cluster_w}) {
        if (pos < lo || pos >= hi) return "cluster " + std::to_string(pos) + " outside window " + std::to_string(q.level);
    }
    const std::array<Vertex, 4> ends{q.u1, q.u2, q.w1, q.w2};
    for (std::size_t a = 0; a < 4; ++a) {
        for (std::size_t b = a + 1; b < 4; ++b) {
            if (ends[a] == ends[b]) return "end vertices are not distinct";
        }
    }
    auto in = [&](std::size_t pos, Vertex v) {
        return std::find(clusters[pos].begin(), clusters[pos].end(), v) != clusters[pos].end();
    };
    if (!in(q.cluster_u, q.u1) || !in(q.cluster_u, q.u2)) return "(u1, u2) not inside its cluster";
    if (!in(q.cluster_w, q.w1) || !in(q.cluster_w, q.w2)) return "(w1, w2) not inside its cluster";

    std::unordered_set<Vertex> allowed;
    for (std::size_t pos = 0; pos < hi; ++pos) allowed.insert(clusters[pos].begin(), clusters[pos].end());
    auto check_path = [&](const std::vector<Vertex>& p, Vertex e1, Vertex e2,
                          const char* name) -> std::optional<std::string> {
        if (p.size() < q.level + 1) return std::string(name) + " is shorter than level + 1";
        if (p[p.size() - 2] != e1 || p.back() != e2) return std::string(name) + " does not end in its end-tuple";
        for (Vertex v : p) {
            if (!allowed.count(v)) return std::string(name) + " leaves windows 1.." + std::to_string(q.level);
        }
        if (auto verdict = validate_tight_path(h, c, TightPath3{p}, colour); !verdict) {
            return std::string(name) + ": " + verdict.reason;
        }
        return std::nullopt;
    };
    if (auto bad = check_path(q.path_u, q.u1, q.u2, "path_u")) return bad;
    if (auto bad = check_path(q.path_w, q.w1, q.w2, "path_w")) return bad;
    return std::nullopt;
}

namespace {

struct Base {
    std::vector<Vertex> path;
    Vertex p = 0, q = 0;  // last two vertices of `path`
    std::string name;
};

struct Extension {
    std::vector<Vertex> tail;
    std::size_t end_pos = 0;
    bool forced = false;
};

class WindowSearch {
public:
    WindowSearch(const ColouredView& view, Colour colour, std::span<const VertexSet> clusters, std::size_t lo,
                 std::size_t hi)
        : view_(view), colour_(colour), clusters_(clusters), lo_(lo), hi_(hi) {}

    bool red(Vertex x, Vertex y, Vertex z) const { return view_.is(x, y, z, colour_); }

    // Two extensions of `base` ending in distinct window clusters. Each window
    // cluster X contributes the vertices x with pqx red; an extension is
    // direct (+x1 x2, qx1x2 red) or forced across two clusters
    // (+x1 y1 y2 with qx1y1 and x1y1y2 red).
    std::optional<std::pair<Extension, Extension>> run(const Base& base) const {
        std::vector<std::optional<Extension>> best(hi_ - lo_);
        std::vector<std::vector<Vertex>> xs(hi_ - lo_);
        for (std::size_t pos = lo_; pos < hi_; ++pos) {
            for (Vertex x : clusters_[pos]) {
                if (red(base.p, base.q, x)) xs[pos - lo_].push_back(x);
            }
        }
        std::size_t covered = 0;
        for (std::size_t pos = lo_; pos < hi_ && covered < 2; ++pos) {
            for (Vertex x1 : xs[pos - lo_]) {
                auto it = std::find_if(clusters_[pos].begin(), clusters_[pos].end(),
                                       [&](Vertex x2) { return x2 != x1 && red(base.q, x1, x2); });
                if (it != clusters_[pos].end()) {
                    best[pos - lo_] = Extension{{x1, *it}, pos, false};
                    ++covered;
                    break;
                }
            }
        }
        for (std::size_t from = lo_; from < hi_ && covered < 2; ++from) {
            for (Vertex x1 : xs[from - lo_]) {
                for (std::size_t to = lo_; to < hi_ && covered < 2; ++to) {
                    if (to == from || best[to - lo_]) continue;
                    if (auto ext = forced(base, x1, to)) {
                        best[to - lo_] = std::move(ext);
                        ++covered;
                    }
                }
                if (covered >= 2) break;
            }
        }
        std::vector<Extension> found;
        for (auto& e : best) {
            if (e) found.push_back(std::move(*e));
        }
        if (found.size() < 2) return std::nullopt;
        return std::make_pair(std::move(found[0]), std::move(found[1]));
    }

private:
    std::optional<Extension> forced(const Base& base, Vertex x1, std::size_t to) const {
        for (Vertex y1 : clusters_[to]) {
            if (!red(base.q, x1, y1)) continue;
            for (Vertex y2 : clusters_[to]) {
                if (y2 != y1 && red(x1, y1, y2)) return Extension{{x1, y1, y2}, to, true};
            }
        }
        return std::nullopt;
    }

    const ColouredView& view_;
    Colour colour_;
    std::span<const VertexSet> clusters_;
    std::size_t lo_, hi_;
};

}  // namespace

ExtensionResult extend_quadruple(const Quadruple& q, std::span<const VertexSet> clusters, std::size_t ell,
                                 const Hypergraph3& h, const TwoColoring& c, Colour role, bool strict) {
    const Colour colour = opposite(role);
    const std::size_t level = q.level + 1;
    const std::size_t lo = q.level * ell, hi = level * ell;
    if (ell < 2) throw std::invalid_argument("extend_quadruple: windows need at least two clusters");
    if (hi > clusters.size()) throw std::invalid_argument("extend_quadruple: window runs past the cluster list");
    if (auto bad = check_quadruple(q, clusters, ell, h, c, colour)) {
        throw std::invalid_argument("extend_quadruple: input quadruple invalid: " + *bad);
    }
    if (strict) {
        if (ell < 17) return ExtensionFailure{true, "window width below 17"};
        for (std::size_t pos = lo; pos < hi; ++pos) {
            if (clusters[pos].size() < 5) {
                return ExtensionFailure{true, "window cluster " + std::to_string(pos) + " has fewer than 5 vertices"};
            }
        }
    }

    ColouredView view(h, c);
    if (!h.contains(q.u1, q.u2, q.w2) || !h.contains(q.w1, q.w2, q.u2)) {
        return ExtensionFailure{true, "source clusters are not fully joined"};
    }
    WindowSearch search(view, colour, clusters, lo, hi);

    std::vector<Base> bases;
    auto with = [](std::vector<Vertex> p, Vertex v) {
        p.push_back(v);
        return p;
    };
    const bool u_side = search.red(q.u1, q.u2, q.w2);
    const bool w_side = search.red(q.w1, q.w2, q.u2);
    if (!u_side && !w_side) return ExtensionFailure{true, "role-coloured c22 between the source clusters"};
    // The pivot triple first (red case), then each source pair on its own
    // (blue case), then the other pivot if it is also available.
    if (u_side) bases.push_back({with(q.path_u, q.w2), q.u2, q.w2, "pivot u1u2w2"});
    else bases.push_back({with(q.path_w, q.u2), q.w2, q.u2, "pivot w1w2u2"});
    bases.push_back({q.path_w, q.w1, q.w2, "source w1w2"});
    bases.push_back({q.path_u, q.u1, q.u2, "source u1u2"});
    if (u_side && w_side) bases.push_back({with(q.path_w, q.u2), q.w2, q.u2, "pivot w1w2u2"});

    for (const auto& base : bases) {
        for (Vertex v : base.path) {
            for (std::size_t pos = lo; pos < hi; ++pos) {
                if (std::find(clusters[pos].begin(), clusters[pos].end(), v) != clusters[pos].end()) {
                    throw std::invalid_argument("extend_quadruple: a source path already enters window " +
                                                std::to_string(level));
                }
            }
        }
        auto pair = search.run(base);
        if (!pair) continue;
        auto& [a, b] = *pair;
        Quadruple out;
        out.level = level;
        out.path_u = base.path;
        out.path_u.insert(out.path_u.end(), a.tail.begin(), a.tail.end());
        out.path_w = base.path;
        out.path_w.insert(out.path_w.end(), b.tail.begin(), b.tail.end());
        out.u1 = out.path_u[out.path_u.size() - 2];
        out.u2 = out.path_u.back();
        out.w1 = out.path_w[out.path_w.size() - 2];
        out.w2 = out.path_w.back();
        out.cluster_u = a.end_pos;
        out.cluster_w = b.end_pos;
        out.step = base.name + (a.forced ? ", forced" : ", direct") + (b.forced ? "/forced" : "/direct");
        if (auto bad = check_quadruple(out, clusters, ell, h, c, colour)) {
            throw HardFault("extend_quadruple produced an invalid quadruple: " + *bad);
        }
        return out;
    }
    if (strict) throw HardFault("extend_quadruple: every case exhausted at level " + std::to_string(level));
    return ExtensionFailure{false, "no two extensions into window " + std::to_string(level)};
}

}  // namespace tightpath
