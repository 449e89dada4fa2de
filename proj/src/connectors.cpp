#include "tightpath/connectors.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace tightpath {

std::string connector_kind_name(ConnectorKind kind) {
    switch (kind) {
        case ConnectorKind::c22: return "c22";
        case ConnectorKind::c212: return "c212";
        case ConnectorKind::c66: return "c66";
        case ConnectorKind::c636: return "c636";
    }
    return "?";
}

std::vector<Vertex> Gadget::vertices() const {
    std::vector<Vertex> out{x1, x2, y1, y2};
    if (z) out.push_back(*z);
    return out;
}

std::vector<Vertex> Connector::vertices() const {
    std::vector<Vertex> out;
    for (const auto& part : parts) {
        auto vs = part.vertices();
        out.insert(out.end(), vs.begin(), vs.end());
    }
    return out;
}

bool gadget_holds(const ColouredView& view, Colour role, const Gadget& g) {
    auto vs = g.vertices();
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return false;
    if (!g.z) return view.is(g.x1, g.x2, g.y1, role) && view.is(g.y1, g.y2, g.x1, role);
    return view.is(g.x1, g.x2, *g.z, role) && view.is(g.x1, *g.z, g.y1, role) && view.is(*g.z, g.y1, g.y2, role);
}

namespace {

void check_disjoint(std::span<const Vertex> a, std::span<const Vertex> b) {
    for (Vertex x : a) {
        if (std::find(b.begin(), b.end(), x) != b.end()) {
            throw std::invalid_argument("connector search: clusters overlap");
        }
    }
}

// Visits every gadget in lexicographic order of (x1, x2, [z,] y1, y2) positions;
// stops when `visit` returns true.
template <class Visit>
void enumerate_c22(const ColouredView& view, Colour role, std::span<const Vertex> xs, std::span<const Vertex> ys,
                   Visit&& visit) {
    for (Vertex x1 : xs) {
        for (Vertex x2 : xs) {
            if (x2 == x1) continue;
            for (Vertex y1 : ys) {
                if (!view.is(x1, x2, y1, role)) continue;
                for (Vertex y2 : ys) {
                    if (y2 == y1 || !view.is(y1, y2, x1, role)) continue;
                    if (visit(Gadget{x1, x2, y1, y2, std::nullopt})) return;
                }
            }
        }
    }
}

template <class Visit>
void enumerate_c212(const ColouredView& view, Colour role, std::span<const Vertex> xs, std::span<const Vertex> ys,
                    std::span<const Vertex> zs, Visit&& visit) {
    for (Vertex x1 : xs) {
        for (Vertex x2 : xs) {
            if (x2 == x1) continue;
            for (Vertex z : zs) {
                if (!view.is(x1, x2, z, role)) continue;
                for (Vertex y1 : ys) {
                    if (!view.is(x1, z, y1, role)) continue;
                    for (Vertex y2 : ys) {
                        if (y2 == y1 || !view.is(z, y1, y2, role)) continue;
                        if (visit(Gadget{x1, x2, y1, y2, z})) return;
                    }
                }
            }
        }
    }
}

}  // namespace

std::optional<Connector> find_c22(const Hypergraph3& h, const TwoColoring& c, Colour role,
                                  std::span<const Vertex> cluster_u, std::span<const Vertex> cluster_v) {
    check_disjoint(cluster_u, cluster_v);
    ColouredView view(h, c);
    std::optional<Connector> found;
    enumerate_c22(view, role, cluster_u, cluster_v, [&](const Gadget& g) {
        found = Connector{ConnectorKind::c22, {g}};
        return true;
    });
    return found;
}

std::optional<Connector> find_c212(const Hypergraph3& h, const TwoColoring& c, Colour role,
                                   std::span<const Vertex> cluster_u, std::span<const Vertex> cluster_v,
                                   std::span<const Vertex> cluster_w) {
    check_disjoint(cluster_u, cluster_v);
    check_disjoint(cluster_u, cluster_w);
    check_disjoint(cluster_v, cluster_w);
    ColouredView view(h, c);
    std::optional<Connector> found;
    enumerate_c212(view, role, cluster_u, cluster_v, cluster_w, [&](const Gadget& g) {
        found = Connector{ConnectorKind::c212, {g}};
        return true;
    });
    return found;
}

std::optional<Connector> find_disjoint_triple(const Hypergraph3& h, const TwoColoring& c, Colour role,
                                              ConnectorKind kind, std::span<const Vertex> cluster_u,
                                              std::span<const Vertex> cluster_v,
                                              std::span<const Vertex> cluster_w) {
    if (kind != ConnectorKind::c66 && kind != ConnectorKind::c636) {
        throw std::invalid_argument("find_disjoint_triple: kind must be c66 or c636");
    }
    const bool through = kind == ConnectorKind::c636;
    check_disjoint(cluster_u, cluster_v);
    if (through) {
        check_disjoint(cluster_u, cluster_w);
        check_disjoint(cluster_v, cluster_w);
    }
    const std::size_t per_side = 6;
    if (cluster_u.size() < per_side || cluster_v.size() < per_side || (through && cluster_w.size() < 3)) {
        return std::nullopt;
    }
    ColouredView view(h, c);

    // Disjointness only depends on vertex sets, so keep one gadget per set.
    std::vector<Gadget> gadgets;
    std::set<std::array<Vertex, 5>> seen;
    auto collect = [&](const Gadget& g) {
        std::array<Vertex, 5> key{std::min(g.x1, g.x2), std::max(g.x1, g.x2), g.z.value_or(0),
                                  std::min(g.y1, g.y2), std::max(g.y1, g.y2)};
        if (seen.insert(key).second) gadgets.push_back(g);
        return false;
    };
    if (through) {
        enumerate_c212(view, role, cluster_u, cluster_v, cluster_w, collect);
    } else {
        enumerate_c22(view, role, cluster_u, cluster_v, collect);
    }
    if (gadgets.size() < 3) return std::nullopt;

    auto disjoint = [](const Gadget& a, const Gadget& b) {
        const auto va = a.vertices();
        const auto vb = b.vertices();
        for (Vertex x : va) {
            if (std::find(vb.begin(), vb.end(), x) != vb.end()) return false;
        }
        return true;
    };
    std::vector<std::size_t> second;
    for (std::size_t i = 0; i < gadgets.size(); ++i) {
        second.clear();
        for (std::size_t j = i + 1; j < gadgets.size(); ++j) {
            if (disjoint(gadgets[i], gadgets[j])) second.push_back(j);
        }
        for (std::size_t a = 0; a < second.size(); ++a) {
            for (std::size_t b = a + 1; b < second.size(); ++b) {
                if (disjoint(gadgets[second[a]], gadgets[second[b]])) {
                    return Connector{kind, {gadgets[i], gadgets[second[a]], gadgets[second[b]]}};
                }
            }
        }
    }
    return std::nullopt;
}

TwoThreeGraph build_auxiliary_f(const Hypergraph3& h, const TwoColoring& c, const ClusterFamily& family,
                                const ConnectorScope& scope) {
    const std::size_t n = family.clusters.size();
    auto cluster = [&](Vertex v) -> const VertexSet& {
        if (v >= n || family.clusters[v].empty()) {
            throw std::invalid_argument("build_auxiliary_f: scope references unknown cluster " + std::to_string(v));
        }
        return family.clusters[v];
    };
    TwoThreeGraph f(n);
    for (auto [u, v] : scope.pairs) {
        if (find_disjoint_triple(h, c, family.role, ConnectorKind::c66, cluster(u), cluster(v))) {
            f.add_two_edge(u, v);
        }
    }
    for (const auto& t : scope.triples) {
        if (find_disjoint_triple(h, c, family.role, ConnectorKind::c636, cluster(t.u), cluster(t.v), cluster(t.w))) {
            f.add_three_edge(t.u, t.v, t.w);
        }
    }
    return f;
}

}  // namespace tightpath
