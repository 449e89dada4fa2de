#include <doctest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "tightpath/connectors.hpp"

using namespace tightpath;

namespace {

VertexSet range(Vertex from, std::size_t count) {
    VertexSet s(count);
    std::iota(s.begin(), s.end(), from);
    return s;
}

}  // namespace

TEST_CASE("a single c22 is found and its triples are blue") {
    const Hypergraph3 h = gen::complete_3graph(4);
    TwoColoring c(h, Colour::red);
    c.set(*h.index_of(0, 1, 2), Colour::blue);
    c.set(*h.index_of(2, 3, 0), Colour::blue);
    const auto got = find_c22(h, c, Colour::blue, VertexSet{0, 1}, VertexSet{2, 3});
    REQUIRE(got);
    CHECK(got->kind == ConnectorKind::c22);
    CHECK(got->parts.front() == Gadget{0, 1, 2, 3, std::nullopt});
    CHECK(gadget_holds(ColouredView(h, c), Colour::blue, got->parts.front()));
    CHECK(find_c22(h, c, Colour::red, VertexSet{0, 1}, VertexSet{2, 3}).has_value() ==
          oracle::has_c22(oracle::ColourCube(h, c), Colour::red, {0, 1}, {2, 3}));
}

TEST_CASE("missing triples never count") {
    const Hypergraph3 h(4, {{0, 1, 2}});
    const TwoColoring c(h, Colour::blue);
    CHECK_FALSE(find_c22(h, c, Colour::blue, VertexSet{0, 1}, VertexSet{2, 3}));
}

TEST_CASE("overlapping clusters are rejected") {
    const Hypergraph3 h = gen::complete_3graph(5);
    const TwoColoring c(h, Colour::blue);
    CHECK_THROWS_AS(find_c22(h, c, Colour::blue, VertexSet{0, 1}, VertexSet{1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(find_c212(h, c, Colour::blue, VertexSet{0, 1}, VertexSet{2, 3}, VertexSet{3}),
                    std::invalid_argument);
}

TEST_CASE("c22 and c212 existence matches tuple enumeration") {
    Rng rng(61);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t su = 2 + uniform_below(rng, 4), sv = 2 + uniform_below(rng, 4), sw = 1 + uniform_below(rng, 5);
        const Hypergraph3 h = gen::complete_3graph(su + sv + sw);
        const TwoColoring c = gen::random_colouring(rng, h, 0.1 + 0.5 * uniform_unit(rng));
        const oracle::ColourCube cube(h, c);
        const VertexSet u = range(0, su), v = range(static_cast<Vertex>(su), sv),
                        w = range(static_cast<Vertex>(su + sv), sw);
        for (Colour role : {Colour::red, Colour::blue}) {
            const auto c22 = find_c22(h, c, role, u, v);
            CHECK(c22.has_value() == oracle::has_c22(cube, role, u, v));
            if (c22) CHECK(oracle::gadget_ok(cube, role, c22->parts.front()));
            const auto c212 = find_c212(h, c, role, u, v, w);
            CHECK(c212.has_value() == oracle::has_c212(cube, role, u, v, w));
            if (c212) CHECK(oracle::gadget_ok(cube, role, c212->parts.front()));
        }
    }
}

TEST_CASE("disjoint triples match the gadget-set oracle") {
    Rng rng(62);
    int c66 = 0, c636 = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const Hypergraph3 h = gen::complete_3graph(15);
        const TwoColoring c = gen::random_colouring(rng, h, 0.05 + 0.25 * uniform_unit(rng));
        const oracle::ColourCube cube(h, c);
        const VertexSet u = range(0, 6), v = range(6, 6), w = range(12, 3);
        const auto got66 = find_disjoint_triple(h, c, Colour::blue, ConnectorKind::c66, u, v);
        CHECK(got66.has_value() == oracle::has_disjoint_c22_triple(cube, Colour::blue, u, v));
        const auto got636 = find_disjoint_triple(h, c, Colour::blue, ConnectorKind::c636, u, v, w);
        CHECK(got636.has_value() == oracle::has_disjoint_c212_triple(cube, Colour::blue, u, v, w));
        for (const auto* got : {&got66, &got636}) {
            if (!*got) continue;
            (got == &got66 ? c66 : c636)++;
            REQUIRE((*got)->parts.size() == 3);
            std::set<Vertex> all;
            for (const auto& g : (*got)->parts) {
                CHECK(oracle::gadget_ok(cube, Colour::blue, g));
                const auto vs = g.vertices();
                all.insert(vs.begin(), vs.end());
            }
            CHECK(all.size() == (got == &got66 ? 12u : 15u));
        }
    }
    CHECK(c66 > 0);
    CHECK(c636 > 0);
}

TEST_CASE("disjoint triples need room") {
    const Hypergraph3 h = gen::complete_3graph(14);
    const TwoColoring c(h, Colour::blue);
    CHECK_FALSE(find_disjoint_triple(h, c, Colour::blue, ConnectorKind::c66, range(0, 5), range(5, 6)));
    CHECK(find_disjoint_triple(h, c, Colour::blue, ConnectorKind::c66, range(0, 6), range(6, 6)));
    CHECK_FALSE(find_disjoint_triple(h, c, Colour::blue, ConnectorKind::c636, range(0, 6), range(6, 6), range(12, 2)));
    CHECK_THROWS_AS(find_disjoint_triple(h, c, Colour::blue, ConnectorKind::c22, range(0, 6), range(6, 6)),
                    std::invalid_argument);
}

TEST_CASE("auxiliary graph on an all-blue complete instance") {
    const Hypergraph3 h = gen::complete_3graph(18);
    const TwoColoring c(h, Colour::blue);
    ClusterFamily family{Colour::blue, {range(0, 6), range(6, 6), range(12, 6)}};
    ConnectorScope scope;
    scope.pairs = {{0, 1}, {1, 2}};
    scope.triples = {{0, 2, 1}};
    const TwoThreeGraph f = build_auxiliary_f(h, c, family, scope);
    CHECK(f.num_vertices() == 3);
    CHECK(f.has_two_edge(0, 1));
    CHECK(f.has_two_edge(1, 2));
    CHECK_FALSE(f.has_two_edge(0, 2));
    CHECK(f.has_three_edge(0, 2, 1));

    const TwoThreeGraph none = build_auxiliary_f(h, c.swapped(), family, scope);
    CHECK(none.num_two_edges() == 0);
    CHECK(none.num_three_edges() == 0);

    scope.pairs.push_back({0, 7});
    CHECK_THROWS_AS(build_auxiliary_f(h, c, family, scope), std::invalid_argument);
}

TEST_CASE("c212 picks the least 5-tuple and needs a middle") {
    const Hypergraph3 h = gen::complete_3graph(5);
    const TwoColoring c(h, Colour::blue);
    const auto got = find_c212(h, c, Colour::blue, VertexSet{0, 1}, VertexSet{2, 3}, VertexSet{4});
    REQUIRE(got);
    CHECK(got->parts.front() == Gadget{0, 1, 2, 3, Vertex{4}});
    CHECK_FALSE(find_c212(h, c, Colour::blue, VertexSet{0, 1}, VertexSet{2, 3}, VertexSet{}));
    CHECK_FALSE(find_c212(h, c.swapped(), Colour::blue, VertexSet{0, 1}, VertexSet{2, 3}, VertexSet{4}));
}

TEST_CASE("all-role clusters of six give gadgets two vertices at a time") {
    const Hypergraph3 h = gen::complete_3graph(12);
    const TwoColoring c(h, Colour::blue);
    const auto got = find_disjoint_triple(h, c, Colour::blue, ConnectorKind::c66, range(0, 6), range(6, 6));
    REQUIRE(got);
    CHECK(got->parts[0] == Gadget{0, 1, 6, 7, std::nullopt});
    CHECK(got->parts[1] == Gadget{2, 3, 8, 9, std::nullopt});
    CHECK(got->parts[2] == Gadget{4, 5, 10, 11, std::nullopt});
    CHECK_FALSE(find_disjoint_triple(h, c, Colour::blue, ConnectorKind::c66, range(0, 4), range(6, 4)));
}
