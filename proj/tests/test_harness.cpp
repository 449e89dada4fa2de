#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "oracles.hpp"
#include "tightpath/harness.hpp"

using namespace tightpath;
using nlohmann::json;

namespace {

// K2 blown up by 6: the complete 3-graph on 12 vertices, small enough for the oracle.
json toy_config() {
    static const std::string graph = [] {
        const auto file = std::filesystem::temp_directory_path() / "tightpath_test_k2.txt";
        std::ofstream out(file);
        out << "graph 2\n0 1\n";
        return file.string();
    }();
    json j = json::parse(R"({
        "params": {"ell": 2, "k": 4, "eps": "1/5", "t": 6, "t_prime": 6, "c": 1, "a": 1, "n": 2},
        "colourer": {"kind": "uniform_random", "p_blue": [0.0, 1.0]},
        "trials": 6, "seed": 3, "oracle_cap": 12, "workers": 2
    })");
    j["instance"] = {{"source", "file"}, {"graph", graph}};
    return j;
}

json strip_timings(json report) {
    report.erase("timings");
    return report;
}

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("tightpath_test_" + name);
    std::filesystem::remove_all(dir);
    return dir;
}

}  // namespace

TEST_CASE("config errors name the field") {
    json j = toy_config();
    j["colour"] = "red";
    CHECK_THROWS_WITH_AS(config_from_json(j), "colour: unknown field", ConfigError);
    j = toy_config();
    j["params"]["zeta"] = 1;
    CHECK_THROWS_AS(config_from_json(j), ConfigError);
    j = toy_config();
    j["instance"]["source"] = "moon";
    CHECK_THROWS_AS(make_instance_graph(config_from_json(j).instance), ConfigError);
    j = toy_config();
    j["trials"] = -1;
    CHECK_THROWS_AS(config_from_json(j), ConfigError);

    ExperimentConfig cfg = config_from_json(toy_config());
    cfg.oracle_cap = 16;
    CHECK_THROWS_AS(run_experiment(cfg), ConfigError);
    cfg.oracle_cap = 12;
    cfg.trials = 0;
    CHECK_THROWS_AS(run_experiment(cfg), ConfigError);
    cfg.trials = 1;
    cfg.params.t = 7;
    CHECK_THROWS_AS(run_experiment(cfg), ConfigError);
}

TEST_CASE("config round-trips through JSON") {
    const ExperimentConfig cfg = config_from_json(toy_config());
    CHECK(cfg.colourer.p_blue_lo == 0.0);
    CHECK(cfg.colourer.p_blue_hi == 1.0);
    CHECK(config_to_json(config_from_json(config_to_json(cfg))) == config_to_json(cfg));
}

TEST_CASE("runs are reproducible apart from timings") {
    ExperimentConfig cfg = config_from_json(toy_config());
    const json first = strip_timings(run_experiment(cfg).to_json());
    cfg.workers = 1;
    const json second = strip_timings(run_experiment(cfg).to_json());
    json a = first, b = second;
    a["config"].erase("workers");
    b["config"].erase("workers");
    CHECK(a == b);
    CHECK(first["aggregate"]["trials"] == 6);
}

TEST_CASE("toy runs never beat the exhaustive oracle") {
    ExperimentConfig cfg = config_from_json(toy_config());
    cfg.trials = 20;
    const RunReport report = run_experiment(cfg);
    CHECK(report.hard_faults() == 0);
    CHECK(report.oracle_violations() == 0);
    for (const auto& row : report.rows) {
        REQUIRE(row.oracle);
        REQUIRE(row.outcome);
        if (row.outcome->success()) CHECK(row.outcome->path.size() <= row.oracle->path.size());
    }
}

TEST_CASE("all-blue trials succeed on the blue branch with one path") {
    json j = toy_config();
    j["colourer"] = {{"kind", "all_blue"}};
    j["trials"] = 10;
    const RunReport report = run_experiment(config_from_json(j));
    CHECK(report.successes() == 10);
    CHECK(report.to_json()["aggregate"]["blue_branch"] == 10);
    for (const auto& row : report.rows) {
        CHECK(*row.outcome->colour == Colour::blue);
        CHECK(row.outcome->path == report.rows.front().outcome->path);
    }
}

TEST_CASE("killer colourings push runs to the red branch") {
    const json j = json::parse(R"({
        "params": {"ell": 2, "k": 4, "t": 5, "t_prime": 5, "n": 3},
        "instance": {"source": "expander", "n": 40, "b": 6, "seed": 1},
        "colourer": {"kind": "connector_killer", "p_blue": [0.0, 1.0]},
        "trials": 100, "seed": 5
    })");
    const json agg = run_experiment(config_from_json(j)).to_json()["aggregate"];
    MESSAGE(agg.dump());
    CHECK(agg["hard_faults"] == 0);
    CHECK(agg["red_branch"].get<int>() > agg["blue_branch"].get<int>());
}

TEST_CASE("killer on two clusters of two") {
    const std::vector<Edge> edge{{0, 1}};
    const HostInstance host = build_host(Graph::from_edges(2, edge), 1, 2);
    const ClusterLayout layout = cluster_layout(host);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        KillerOptions opts;
        opts.p_blue = 1.0;
        const KillerResult r = colour_connector_killer(host.h, layout, seed, opts);
        const oracle::ColourCube cube(host.h, r.colouring);
        // x1 x2 y1 and y1 y2 x1 over every labelling of the two pairs
        for (Vertex x1 : {0u, 1u})
            for (Vertex y1 : {2u, 3u}) {
                const Vertex x2 = 1 - x1, y2 = 5 - y1;
                CHECK_FALSE((cube.is(x1, x2, y1, Colour::blue) && cube.is(y1, y2, x1, Colour::blue)));
            }
        CHECK(r.residual == 0);
    }
}

TEST_CASE("connector killer leaves nothing on scope") {
    const HostInstance host = build_host(cycle_power(6, 1), 2, 5);
    const ClusterLayout layout = cluster_layout(host);
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        KillerOptions opts;
        opts.p_blue = 0.5 + 0.15 * static_cast<double>(seed);
        const KillerResult r = colour_connector_killer(host.h, layout, seed, opts);
        CHECK(r.residual == 0);
        CHECK(count_live_connectors(host.h, r.colouring, layout) == 0);
        const oracle::ColourCube cube(host.h, r.colouring);
        for (const auto& [i, j] : layout.scope.pairs)
            CHECK_FALSE(oracle::has_c22(cube, Colour::blue, layout.family.clusters[i], layout.family.clusters[j]));
        for (Vertex v = 0; v < 6; ++v) {
            const auto cl = host.blown.cluster(v);
            CHECK(cube.is(cl[0], cl[1], cl[2], Colour::blue));
        }
    }
    KillerOptions capped;
    capped.p_blue = 1.0;
    capped.flip_budget = 1;
    const KillerResult r = colour_connector_killer(host.h, layout, 9, capped);
    CHECK(r.flips == 1);
    CHECK(r.residual > 0);
}

TEST_CASE("dumped trials replay offline") {
    const auto dir = scratch("dump");
    json j = toy_config();
    j["colourer"] = {{"kind", "all_blue"}};
    j["trials"] = 2;
    j["dump_dir"] = dir.string();
    j["report"] = (dir / "report.json").string();
    const RunReport report = run_experiment(config_from_json(j));
    REQUIRE(report.successes() == 2);

    std::ifstream hin(dir / "hypergraph.txt");
    const Hypergraph3 h = read_hypergraph(hin);
    CHECK(h.num_triples() == report.triples);
    for (int i = 0; i < 2; ++i) {
        std::ifstream cin(dir / ("colouring_" + std::to_string(i) + ".txt"));
        std::ifstream pin(dir / ("path_" + std::to_string(i) + ".txt"));
        const TwoColoring c = read_colouring(cin, h);
        const auto [path, colour] = read_tight_path(pin);
        CHECK(validate_tight_path(h, c, path, colour));
        CHECK(oracle::is_tight_path(oracle::ColourCube(h, c), path.vertices, colour));
    }
    std::ifstream rin(dir / "report.json");
    const json saved = json::parse(rin);
    CHECK(saved["aggregate"]["successes"] == 2);
    std::filesystem::remove_all(dir);
}

TEST_CASE("unwritable report paths surface as I/O errors") {
    json j = toy_config();
    j["trials"] = 1;
    j["report"] = "/proc/tightpath/report.json";
    CHECK_THROWS_AS(run_experiment(config_from_json(j)), IoError);
}
