// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.
// Each criterion also has a wall-clock limit that counts toward its verdict.
// Arguments select criteria by number; none runs all of them.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "generators.hpp"
#include "oracles.hpp"
#include "tightpath/extraction.hpp"
#include "tightpath/graph.hpp"
#include "tightpath/hypergraph.hpp"
#include "tightpath/two_three.hpp"
#include "window.hpp"

using namespace tightpath;

namespace {

struct Verdict {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

VertexSet range(Vertex from, std::size_t count) {
    VertexSet s(count);
    std::iota(s.begin(), s.end(), from);
    return s;
}

Verdict constants() {
    Verdict v;
    const std::uint64_t k = 34;
    const std::uint64_t t = 8 * k + 40 * k * k + 5;
    const std::uint64_t budget = 4 * (2 * k) + 10 * (4 * k * k);
    if (t != 46517) v.fail("8k + 40k^2 + 5 = " + std::to_string(t));
    if (budget != 46512 || budget != t - 5) v.fail("4(2k) + 10(4k^2) = " + std::to_string(budget));
    if (paper_t(k) != t) v.fail("library t = " + std::to_string(paper_t(k)));
    if (deletion_budget(k) != budget) v.fail("library budget = " + std::to_string(deletion_budget(k)));
    PipelineParams p;
    p.ell = 17;
    p.k = k;
    p.t = p.t_prime = t;
    p.eps = Rational(1, 35);
    p.strict_constants = true;
    if (!(p.eps == Rational(1, static_cast<std::int64_t>(k) + 1))) v.fail("eps != 1/(k+1)");
    if (auto bad = constant_violations(p); !bad.empty()) v.fail("strict constants rejected: " + bad.front());
    p.eps = Rational(2, 70);
    if (!constant_violations(p).empty()) v.fail("2/70 not reduced to 1/35");
    if (v.ok) v.detail = "t = 46517, budget = 46512 = t - 5, eps = 1/35";
    return v;
}

Verdict dfs_fidelity() {
    Verdict v;
    Rng rng(1001);
    std::size_t iterations = 0, states = 0;
    for (int trial = 0; trial < 500 && v.ok; ++trial) {
        const std::size_t n = 10 + uniform_below(rng, 291);
        const std::size_t k = 2 + uniform_below(rng, 2);
        const double p2 = (1.0 + 4.0 * uniform_unit(rng)) / static_cast<double>(n);
        const TwoThreeGraph f = gen::random_two_three(rng, n, p2, 2.0 * uniform_unit(rng));
        const auto sets = gen::random_partition(rng, n, k, 0.7 + 0.3 * uniform_unit(rng));
        DfsOptions opts;
        opts.check_invariants = false;
        const auto result = dfs_traverse(f, sets, opts, [&](const DfsState& st, std::size_t it) {
            ++states;
            if (auto bad = oracle::dfs_state_violation(f, sets, st)) {
                v.fail("graph " + std::to_string(trial) + ", iteration " + std::to_string(it) + ": " + *bad);
                return DfsControl::stop;
            }
            return DfsControl::proceed;
        });
        iterations += result.iterations;
        if (result.iterations > 2 * sets.back().size())
            v.fail("graph " + std::to_string(trial) + " took " + std::to_string(result.iterations) + " iterations");
    }
    if (v.ok) v.detail = "500 graphs, " + std::to_string(states) + " states checked, all within 2|V_k|";
    return v;
}

Verdict obstruction_dichotomy() {
    Verdict v;
    Rng rng(1002);
    int paths = 0, sets_out = 0;
    for (int trial = 0; trial < 200 && v.ok; ++trial) {
        const std::size_t c = 1 + uniform_below(rng, 2);
        const std::size_t n = 5 + uniform_below(rng, 8);
        const std::size_t vertices = 5 * c * n + uniform_below(rng, 10);
        const double p2 = 0.2 * uniform_unit(rng) * uniform_unit(rng);
        const TwoThreeGraph f = gen::random_two_three(rng, vertices, p2, 1.5 * uniform_unit(rng));
        const auto got = extract_obstruction_sets(f, 2, c, n);
        const std::string where = "graph " + std::to_string(trial) + ": ";
        if (const auto* p = std::get_if<TwoThreePath>(&got)) {
            ++paths;
            if (p->size() < n) v.fail(where + "path on " + std::to_string(p->size()) + " < n vertices");
            if (!oracle::is_23_path(f, p->vertices, p->witnesses)) v.fail(where + "returned path is not a (2,3)-path");
        } else {
            ++sets_out;
            const auto& sets = std::get<ObstructionSets>(got).sets;
            if (sets.size() != 2) v.fail(where + "expected 2 sets");
            for (const auto& s : sets)
                if (s.size() < c * n) v.fail(where + "set of size " + std::to_string(s.size()) + " < cn");
            if (auto bad = oracle::obstruction_violation(f, sets)) v.fail(where + *bad);
        }
    }
    if (v.ok && (paths == 0 || sets_out == 0)) v.fail("only one outcome exercised");
    if (v.ok) v.detail = std::to_string(paths) + " paths, " + std::to_string(sets_out) + " obstruction pairs";
    return v;
}

Verdict expansion() {
    Verdict v;
    const std::size_t n = 2000;
    const Rational eps(1, 5);
    int passed = 0;
    std::size_t pairs = 0, violations = 0;
    double worst_lambda = 0.0;
    std::vector<Graph> passing;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        ExpanderParams ep;
        ep.eps = eps;
        ep.b = 128;
        ep.seed = seed;
        Graph g = sample_expander(ep, n);
        if (g.num_vertices() != n || g.regular_degree() != std::optional<std::size_t>(128)) {
            v.fail("seed " + std::to_string(seed) + " is not a 128-regular graph on 2000 vertices");
            continue;
        }
        const auto cert = certify_p1(g, eps, n);
        worst_lambda = std::max(worst_lambda, cert.lambda_bound);
        if (cert.passed) {
            ++passed;
            passing.push_back(std::move(g));
        }
    }
    if (passed < 9) v.fail("only " + std::to_string(passed) + " of 10 seeds certified");
    // Sampled set pairs, counted straight from the adjacency matrix.
    Rng rng(1004);
    const std::size_t s = 400;  // ceil(eps * n)
    for (std::size_t gi = 0; gi < passing.size(); ++gi) {
        const auto adj = oracle::adjacency_matrix(passing[gi]);
        const std::size_t share = 10000 / passing.size() + (gi < 10000 % passing.size());
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), Vertex{0});
        for (std::size_t trial = 0; trial < share; ++trial) {
            shuffle(perm, rng);
            bool edge = false;
            for (std::size_t i = 0; i < s && !edge; ++i)
                for (std::size_t j = s; j < 2 * s && !edge; ++j) edge = adj[perm[i]][perm[j]];
            ++pairs;
            violations += !edge;
        }
    }
    if (violations) v.fail(std::to_string(violations) + " sampled pairs span no edge");
    if (v.ok) {
        std::ostringstream os;
        os << passed << "/10 certified, max lambda " << worst_lambda << " (threshold 25.6), " << pairs << " pairs, 0 empty";
        v.detail = os.str();
    }
    return v;
}

Verdict connector_equivalence() {
    Verdict v;
    Rng rng(1005);
    int c22 = 0, c212 = 0;
    for (int trial = 0; trial < 500 && v.ok; ++trial) {
        const std::size_t su = 1 + uniform_below(rng, 5), sv = 1 + uniform_below(rng, 5), sw = 1 + uniform_below(rng, 5);
        const Hypergraph3 h = gen::complete_3graph(su + sv + sw);
        const TwoColoring c = gen::random_colouring(rng, h, uniform_unit(rng));
        const oracle::ColourCube cube(h, c);
        const VertexSet u = range(0, su), w1 = range(static_cast<Vertex>(su), sv),
                        mid = range(static_cast<Vertex>(su + sv), sw);
        for (Colour role : {Colour::red, Colour::blue}) {
            const bool a = find_c22(h, c, role, u, w1).has_value();
            const bool b = find_c212(h, c, role, u, w1, mid).has_value();
            c22 += a;
            c212 += b;
            if (a != oracle::has_c22(cube, role, u, w1)) v.fail("c22 mismatch on colouring " + std::to_string(trial));
            if (b != oracle::has_c212(cube, role, u, w1, mid))
                v.fail("c212 mismatch on colouring " + std::to_string(trial));
        }
    }
    if (v.ok) v.detail = "1000 queries each; c22 present " + std::to_string(c22) + ", c212 present " + std::to_string(c212);
    return v;
}

Verdict blue_branch() {
    Verdict v;
    PipelineParams p;
    p.ell = 2;
    p.k = 4;
    p.eps = Rational(1, 5);
    p.t = p.t_prime = 6;
    p.n = 10;
    const HostInstance host = build_host(cycle_power(20, 2), p.k, p.t_prime);
    const TwoColoring blue(host.h, Colour::blue);
    const auto out = extract_mono_tight_path(host, p, blue);
    if (!out.success()) return {false, "no path: " + out.failure->detail};
    if (*out.colour != Colour::blue || out.trace.branch != "blue") v.fail("expected the blue branch");
    if (out.path.size() < p.n) v.fail("path on " + std::to_string(out.path.size()) + " vertices");
    if (!oracle::is_tight_path(oracle::ColourCube(host.h, blue), out.path.vertices, Colour::blue))
        v.fail("blue path fails the independent check");
    const TwoColoring red = blue.swapped();
    const auto twin = extract_mono_tight_path(host, p, red);
    if (!twin.success()) return {false, "swapped input: " + twin.failure->detail};
    if (*twin.colour != Colour::red) v.fail("swapped input did not give a red path");
    if (twin.path != out.path) v.fail("red twin differs from the blue path");
    if (!oracle::is_tight_path(oracle::ColourCube(host.h, red), twin.path.vertices, Colour::red))
        v.fail("red twin fails the independent check");
    if (v.ok) v.detail = "blue path on " + std::to_string(out.path.size()) + " vertices, identical red twin";
    return v;
}

Verdict window_extension() {
    Verdict v;
    Rng rng(1007);
    const auto w = window::make(17, 5);
    const Quadruple base = base_quadruple(w.clusters);
    std::size_t flips = 0;
    std::map<std::string, int> steps;
    for (int trial = 0; trial < 1000 && v.ok; ++trial) {
        const std::string where = "colouring " + std::to_string(trial) + ": ";
        const auto col = window::adversary(w, rng, 0.5 + 0.5 * uniform_unit(rng));
        flips += col.flips;
        if (auto live = window::live_connector(w, col.cube)) {
            v.fail(where + "generator left a blue " + *live);
            break;
        }
        const TwoColoring c = window::to_colouring(w.h, col.cube);
        try {
            const auto got = extend_quadruple(base, w.clusters, 17, w.h, c, Colour::blue, true);
            if (const auto* bad = std::get_if<ExtensionFailure>(&got)) {
                v.fail(where + bad->detail);
                break;
            }
            const auto& q = std::get<Quadruple>(got);
            ++steps[q.step.substr(0, q.step.find(','))];
            if (auto broken = oracle::quadruple_violation(q, w.clusters, 17, col.cube, Colour::red))
                v.fail(where + "Q_2 fails: " + *broken);
        } catch (const std::exception& e) {
            v.fail(where + e.what());
        }
    }
    if (v.ok) {
        v.detail = "1000 windows, " + std::to_string(flips) + " adversarial flips; cases";
        for (const auto& [name, count] : steps) v.detail += " " + name + ":" + std::to_string(count);
    }
    return v;
}

Verdict oracle_domination() {
    Verdict v;
    Rng rng(1008);
    // Three 12-vertex hosts: K2 blown up by 6, K3 by 4, K4 by 3.
    std::vector<std::pair<HostInstance, PipelineParams>> hosts;
    for (std::size_t origins : {2, 3, 4}) {
        std::vector<Edge> edges;
        for (Vertex a = 0; a < origins; ++a)
            for (Vertex b = a + 1; b < origins; ++b) edges.emplace_back(a, b);
        PipelineParams p;
        p.ell = 2;
        p.k = 4;
        p.t = p.t_prime = 12 / origins;
        p.n = 2;
        hosts.emplace_back(build_host(Graph::from_edges(origins, edges), p.k, p.t_prime), p);
    }
    int successes = 0;
    std::map<std::string, int> failures;
    for (int trial = 0; trial < 200 && v.ok; ++trial) {
        const auto& [host, p] = hosts[trial % hosts.size()];
        const std::string where = "colouring " + std::to_string(trial) + ": ";
        TwoColoring c = gen::random_colouring(rng, host.h, uniform_unit(rng));
        if (trial % 2) {
            // every cluster monochromatic, mostly blue; cross triples stay random
            std::vector<Colour> inner(host.g.num_vertices());
            for (auto& col : inner) col = uniform_unit(rng) < 0.8 ? Colour::blue : Colour::red;
            const auto& map = host.h.cluster_map();
            for (std::size_t i = 0; i < host.h.num_triples(); ++i) {
                const auto& t = host.h.triple(i);
                if (map[t.a] == map[t.b] && map[t.b] == map[t.c]) c.set(i, inner[map[t.a]]);
            }
        }
        const oracle::ColourCube cube(host.h, c);
        const std::size_t best = oracle::longest_mono_tight_path(cube);
        try {
            const auto out = extract_mono_tight_path(host, p, c);
            if (!out.success()) {
                ++failures[failure_kind_name(out.failure->kind)];
                continue;
            }
            ++successes;
            if (out.path.size() > best)
                v.fail(where + "path on " + std::to_string(out.path.size()) + " > oracle " + std::to_string(best));
            if (!oracle::is_tight_path(cube, out.path.vertices, *out.colour)) v.fail(where + "path does not re-validate");
        } catch (const std::exception& e) {
            v.fail(where + e.what());
        }
    }
    if (v.ok && successes == 0) v.fail("no pipeline successes to compare");
    if (v.ok) {
        v.detail = std::to_string(successes) + " successes dominated;";
        for (const auto& [name, count] : failures) v.detail += " " + name + ":" + std::to_string(count);
    }
    return v;
}

Verdict uniformity_lift() {
    Verdict v;
    Rng rng(1009);
    for (int trial = 0; trial < 100 && v.ok; ++trial) {
        const std::size_t len = 3 + uniform_below(rng, 40);
        std::vector<Vertex> pool(200);
        std::iota(pool.begin(), pool.end(), Vertex{0});
        shuffle(pool, rng);
        const TightPath3 p{std::vector<Vertex>(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(len))};
        for (std::size_t r : {6, 9}) {
            const std::string where = "path " + std::to_string(trial) + ", r = " + std::to_string(r) + ": ";
            const LiftedPath lifted = lift_to_r_uniform(p, r);
            if (!validate_lifted_path(lifted)) v.fail(where + "library validator rejects");
            if (!oracle::is_lifted_path(lifted.edges, r, len * r / 3)) v.fail(where + "overlap validator rejects");
            if (lifted.edges.size() != len - 2) v.fail(where + "wrong edge count");
            // edge i is the union of the blocks of p[i], p[i+1], p[i+2]
            const std::size_t block = r / 3;
            for (std::size_t i = 0; i < lifted.edges.size() && v.ok; ++i) {
                std::set<Vertex> want;
                for (std::size_t j = i; j < i + 3; ++j)
                    for (std::size_t b = 0; b < block; ++b) want.insert(static_cast<Vertex>(p.vertices[j] * block + b));
                if (std::set<Vertex>(lifted.edges[i].begin(), lifted.edges[i].end()) != want)
                    v.fail(where + "edge " + std::to_string(i) + " is not a union of blocks");
            }
        }
    }
    if (v.ok) v.detail = "200 lifts accepted by both validators";
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    struct Criterion {
        int id;
        const char* name;
        double limit_ms;
        std::function<Verdict()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "constants arithmetic", 1.0, constants},
        {2, "DFS invariants and termination", 30'000, dfs_fidelity},
        {3, "obstruction-set dichotomy", 60'000, obstruction_dichotomy},
        {4, "expansion certificate", 120'000, expansion},
        {5, "connector oracle equivalence", 30'000, connector_equivalence},
        {6, "blue branch and colour twin", 60'000, blue_branch},
        {7, "quadruple extension on adversarial windows", 300'000, window_extension},
        {8, "oracle domination on toy hosts", 300'000, oracle_domination},
        {9, "uniformity lift", 5'000, uniformity_lift},
    };
    std::set<int> chosen;
    for (int i = 1; i < argc; ++i) chosen.insert(std::atoi(argv[i]));
    int failed = 0, ran = 0;
    for (const auto& c : criteria) {
        if (!chosen.empty() && !chosen.count(c.id)) continue;
        ++ran;
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (v.ok && ms > c.limit_ms) {
            std::ostringstream os;
            os << "over the " << c.limit_ms << " ms limit; " << v.detail;
            v = {false, os.str()};
        }
        failed += !v.ok;
        std::printf("%s criterion %d: %s (%.3f ms) %s\n", v.ok ? "PASS" : "FAIL", c.id, c.name, ms, v.detail.c_str());
        std::fflush(stdout);
    }
    if (ran == 0) {
        std::fprintf(stderr, "no such criterion\n");
        return 2;
    }
    std::printf("%d of %d criteria passed\n", ran - failed, ran);
    return failed ? 1 : 0;
}
