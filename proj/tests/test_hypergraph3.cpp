#include <doctest.h>

#include <sstream>

#include "generators.hpp"
#include "oracles.hpp"
#include "tightpath/hypergraph.hpp"

using namespace tightpath;

TEST_CASE("triangle hypergraph matches the triple-loop enumeration") {
    Rng rng(4);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 3 + uniform_below(rng, 15);
        const Graph g = gen::random_graph(rng, n, 0.4);
        const Hypergraph3 h = triangles_to_hypergraph(g);
        const auto want = oracle::triangles(oracle::adjacency_matrix(g));
        REQUIRE(h.num_triples() == want.size());
        for (std::size_t i = 0; i < want.size(); ++i) {
            CHECK(h.triple(i).a == want[i][0]);
            CHECK(h.triple(i).b == want[i][1]);
            CHECK(h.triple(i).c == want[i][2]);
        }
    }
}

TEST_CASE("blow-up of an edge gives the complete 3-graph") {
    const std::vector<Edge> edge{{0, 1}};
    const auto b = blow_up(Graph::from_edges(2, edge), 6);
    const Hypergraph3 h = triangles_to_hypergraph(b.graph, b.cluster_map);
    CHECK(h.num_vertices() == 12);
    CHECK(h.num_triples() == 220);
    CHECK(h.cluster_map() == b.cluster_map);
}

TEST_CASE("triple lookup ignores argument order") {
    const Hypergraph3 h = gen::complete_3graph(5);
    const auto idx = h.index_of(4, 1, 2);
    REQUIRE(idx);
    CHECK(h.triple(*idx) == Triple{1, 2, 4});
    CHECK(h.index_of(2, 4, 1) == idx);
    CHECK_FALSE(h.contains(1, 1, 2));
    CHECK_FALSE(h.contains(0, 1, 9));
}

TEST_CASE("tight path validation agrees with the definition") {
    Rng rng(8);
    const Hypergraph3 h = gen::complete_3graph(8);
    for (int trial = 0; trial < 300; ++trial) {
        const TwoColoring c = gen::random_colouring(rng, h, 0.7);
        const oracle::ColourCube cube(h, c);
        std::vector<Vertex> p;
        const std::size_t len = uniform_below(rng, 9);
        for (std::size_t i = 0; i < len; ++i) p.push_back(static_cast<Vertex>(uniform_below(rng, 8)));
        for (Colour col : {Colour::red, Colour::blue}) {
            CHECK(static_cast<bool>(validate_tight_path(h, c, TightPath3{p}, col)) == oracle::is_tight_path(cube, p, col));
        }
    }
}

TEST_CASE("short sequences") {
    const Hypergraph3 h = gen::complete_3graph(4);
    const TwoColoring c(h, Colour::red);
    CHECK(validate_tight_path(h, c, TightPath3{{}}, Colour::blue));
    CHECK(validate_tight_path(h, c, TightPath3{{0, 1}}, Colour::blue));
    CHECK_FALSE(validate_tight_path(h, c, TightPath3{{1, 1}}, Colour::blue));
    CHECK_FALSE(validate_tight_path(h, c, TightPath3{{0, 1, 2}}, Colour::blue));
    const auto verdict = validate_tight_path(h, c, TightPath3{{0, 1, 2, 0}}, Colour::red);
    CHECK_FALSE(verdict);
    CHECK_FALSE(verdict.reason.empty());
}

TEST_CASE("monochromatic clique search matches subset enumeration") {
    Rng rng(12);
    const Hypergraph3 h = gen::complete_3graph(9);
    VertexSet all{0, 1, 2, 3, 4, 5, 6, 7, 8};
    for (int trial = 0; trial < 120; ++trial) {
        const TwoColoring c = gen::random_colouring(rng, h, 0.5 + 0.45 * uniform_unit(rng));
        const oracle::ColourCube cube(h, c);
        const std::size_t t = 3 + uniform_below(rng, 4);
        for (Colour col : {Colour::red, Colour::blue}) {
            const auto got = find_mono_clique_of_colour(h, c, all, t, col);
            CHECK(got.has_value() == oracle::has_mono_clique(cube, all, t, col));
            if (got) {
                CHECK(got->vertices.size() == t);
                CHECK(oracle::has_mono_clique(cube, got->vertices, t, col));
            }
        }
    }
}

TEST_CASE("clique search follows cluster order") {
    const Hypergraph3 h = gen::complete_3graph(6);
    const TwoColoring c(h, Colour::blue);
    const std::vector<Vertex> cluster{5, 3, 1, 0};
    const auto got = find_mono_clique(h, c, cluster, 3);
    REQUIRE(got);
    CHECK(got->colour == Colour::blue);
    CHECK(got->vertices == VertexSet{5, 3, 1});
}

TEST_CASE("brute-force longest path agrees with the reference search") {
    Rng rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 4 + uniform_below(rng, 5);
        const Hypergraph3 h = gen::complete_3graph(n);
        const TwoColoring c = gen::random_colouring(rng, h, uniform_unit(rng));
        const oracle::ColourCube cube(h, c);
        const auto got = brute_force_longest_mono_tight_path(h, c, n);
        CHECK(got.path.size() == oracle::longest_mono_tight_path(cube));
        CHECK(oracle::is_tight_path(cube, got.path.vertices, got.colour));
    }
}

TEST_CASE("lifting to r-uniform paths") {
    const TightPath3 p{{3, 0, 2, 1}};
    for (std::size_t r : {3u, 6u, 9u}) {
        const auto lifted = lift_to_r_uniform(p, r);
        CHECK(lifted.overlap == 2 * r / 3);
        CHECK(lifted.edges.size() == 2);
        CHECK(validate_lifted_path(lifted));
        CHECK(oracle::is_lifted_path(lifted.edges, r, 4 * r / 3));
    }
    CHECK_THROWS_AS(lift_to_r_uniform(p, 4), std::invalid_argument);
    auto broken = lift_to_r_uniform(p, 6);
    std::swap(broken.edges[1][0], broken.edges[1][5]);
    CHECK_FALSE(validate_lifted_path(broken));
}

TEST_CASE("hypergraph, colouring and path files round-trip") {
    Rng rng(2);
    const Hypergraph3 h = gen::complete_3graph(6);
    const TwoColoring c = gen::random_colouring(rng, h, 0.5);
    std::stringstream hs, cs, ps;
    write_hypergraph(hs, h);
    write_colouring(cs, h, c);
    const Hypergraph3 h2 = read_hypergraph(hs);
    CHECK(h2.num_triples() == h.num_triples());
    const TwoColoring c2 = read_colouring(cs, h2);
    CHECK(c2.colours() == c.colours());
    write_tight_path(ps, TightPath3{{4, 2, 0}}, Colour::red);
    const auto [path, colour] = read_tight_path(ps);
    CHECK(path.vertices == std::vector<Vertex>{4, 2, 0});
    CHECK(colour == Colour::red);

    std::stringstream missing("0 1 2 R\n");
    CHECK_THROWS_AS(read_colouring(missing, h), ParseError);
    std::stringstream unknown("0 1 7 R\n");
    CHECK_THROWS_AS(read_colouring(unknown, h), ParseError);
    CHECK_THROWS_AS(parse_colour("green"), ParseError);
}

TEST_CASE("colour swap") {
    const Hypergraph3 h = gen::complete_3graph(4);
    TwoColoring c(h, Colour::red);
    c.set(0, Colour::blue);
    const TwoColoring s = c.swapped();
    CHECK(s.at(0) == Colour::red);
    CHECK(s.at(1) == Colour::blue);
    CHECK(s.swapped().colours() == c.colours());
}

TEST_CASE("small closed-form cases") {
    const std::vector<Edge> edge{{0, 1}};
    const auto b = blow_up(Graph::from_edges(2, edge), 2);
    const Hypergraph3 h = triangles_to_hypergraph(b.graph, b.cluster_map);
    CHECK(h.num_triples() == 4);
    CHECK(h.contains(0, 1, 2));
    CHECK(h.contains(0, 1, 3));
    CHECK(h.contains(2, 3, 0));
    CHECK(h.contains(2, 3, 1));
    CHECK(triangles_to_hypergraph(cycle_power(8, 1)).num_triples() == 0);

    const Hypergraph3 k5 = gen::complete_3graph(5);
    const TwoColoring blue(k5, Colour::blue);
    CHECK(validate_tight_path(k5, blue, TightPath3{{0, 1, 2, 3, 4}}, Colour::blue));
    const auto red = validate_tight_path(k5, blue, TightPath3{{0, 1, 2, 3, 4}}, Colour::red);
    CHECK_FALSE(red);
    CHECK(red.position == 0);

    const Hypergraph3 k4 = gen::complete_3graph(4);
    CHECK(brute_force_longest_mono_tight_path(k4, TwoColoring(k4, Colour::blue), 4).path.size() == 4);
    const Hypergraph3 bare(6, {});
    CHECK(brute_force_longest_mono_tight_path(bare, TwoColoring(bare, Colour::blue), 6).path.size() == 2);

    const TightPath3 p{{4, 2, 7}};
    const auto same = lift_to_r_uniform(p, 3);
    CHECK(same.order == p.vertices);
    CHECK(same.edges.size() == 1);
}
