#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tightpath/hypergraph.hpp"
#include "tightpath/two_three.hpp"

namespace tightpath {

enum class ConnectorKind { c22, c212, c66, c636 };

std::string connector_kind_name(ConnectorKind kind);

// One (2,2)-gadget (x1 x2 y1, y1 y2 x1) or, with a middle vertex z, one
// (2,1,2)-gadget (x1 x2 z, x1 z y1, z y1 y2).
struct Gadget {
    Vertex x1 = 0, x2 = 0, y1 = 0, y2 = 0;
    std::optional<Vertex> z;

    std::vector<Vertex> vertices() const;
    friend bool operator==(const Gadget&, const Gadget&) = default;
};

struct Connector {
    ConnectorKind kind = ConnectorKind::c22;
    std::vector<Gadget> parts;  // one for c22/c212, three pairwise disjoint for c66/c636

    std::vector<Vertex> vertices() const;
};

// Monochromatic cliques H'(v) chosen inside each blown-up cluster, indexed by
// origin vertex; an empty entry means the origin is not part of the family.
struct ClusterFamily {
    Colour role = Colour::blue;
    std::vector<VertexSet> clusters;
};

// Vertices are distinct and every triple the gadget claims exists with the role colour.
bool gadget_holds(const ColouredView& view, Colour role, const Gadget& g);

std::optional<Connector> find_c22(const Hypergraph3& h, const TwoColoring& c, Colour role,
                                  std::span<const Vertex> cluster_u, std::span<const Vertex> cluster_v);

std::optional<Connector> find_c212(const Hypergraph3& h, const TwoColoring& c, Colour role,
                                   std::span<const Vertex> cluster_u, std::span<const Vertex> cluster_v,
                                   std::span<const Vertex> cluster_w);

// Three pairwise vertex-disjoint c22 (kind c66) or c212 (kind c636, middle
// vertices included) between the same clusters. `cluster_w` is ignored for c66.
std::optional<Connector> find_disjoint_triple(const Hypergraph3& h, const TwoColoring& c, Colour role,
                                              ConnectorKind kind, std::span<const Vertex> cluster_u,
                                              std::span<const Vertex> cluster_v,
                                              std::span<const Vertex> cluster_w = {});

// Cluster pairs and (pair, middle) triples to test, in origin ids.
struct ConnectorScope {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    std::vector<ThreeEdge> triples;  // {u, v} through w
};

// F on the family's origin ids: uv when a c66 joins H'(u), H'(v); uv(w) when a
// c636 joins them through H'(w).
TwoThreeGraph build_auxiliary_f(const Hypergraph3& h, const TwoColoring& c, const ClusterFamily& family,
                                const ConnectorScope& scope);

}  // namespace tightpath
