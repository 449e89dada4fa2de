#include "tightpath/harness.hpp"

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>

namespace tightpath {

using nlohmann::json;

TwoColoring colour_uniform_random(const Hypergraph3& h, double p_blue, std::uint64_t seed) {
    if (!(p_blue >= 0.0 && p_blue <= 1.0)) throw std::invalid_argument("p_blue must lie in [0, 1]");
    Rng rng(seed);
    std::vector<Colour> colours(h.num_triples());
    for (auto& col : colours) col = uniform_unit(rng) < p_blue ? Colour::blue : Colour::red;
    return TwoColoring(h, std::move(colours));
}

namespace {

bool intra_cluster(const Hypergraph3& h, const Triple& t) {
    const auto& cm = h.cluster_map();
    return !cm.empty() && cm[t.a] == cm[t.b] && cm[t.b] == cm[t.c];
}

}  // namespace

TwoColoring colour_cluster_mixer(const Hypergraph3& h, std::uint64_t seed) {
    if (h.cluster_map().empty()) throw std::invalid_argument("cluster_mixer needs a hypergraph with clusters");
    Rng rng(seed);
    std::vector<Colour> colours(h.num_triples(), Colour::blue);
    for (std::size_t i = 0; i < h.num_triples(); ++i) {
        if (intra_cluster(h, h.triple(i))) colours[i] = uniform_below(rng, 2) ? Colour::blue : Colour::red;
    }
    return TwoColoring(h, std::move(colours));
}

ClusterLayout cluster_layout(const HostInstance& host) {
    ClusterLayout layout;
    layout.family.role = Colour::blue;
    const std::size_t n = host.power.num_vertices();
    for (Vertex v = 0; v < n; ++v) layout.family.clusters.push_back(host.blown.cluster(v));
    for (const auto& [a, b] : host.power.edges()) {
        layout.scope.pairs.emplace_back(a, b);
        for (Vertex d : host.power.neighbours(b)) {
            if (d > b && host.power.has_edge(a, d)) {
                layout.scope.triples.push_back({a, b, d});
                layout.scope.triples.push_back({a, d, b});
                layout.scope.triples.push_back({b, d, a});
            }
        }
    }
    return layout;
}

std::size_t count_live_connectors(const Hypergraph3& h, const TwoColoring& c, const ClusterLayout& layout) {
    const auto& cl = layout.family.clusters;
    const Colour role = layout.family.role;
    std::size_t live = 0;
    for (const auto& [u, v] : layout.scope.pairs) live += find_c22(h, c, role, cl.at(u), cl.at(v)).has_value();
    for (const auto& t : layout.scope.triples) {
        live += find_c212(h, c, role, cl.at(t.u), cl.at(t.v), cl.at(t.w)).has_value();
    }
    return live;
}

KillerResult colour_connector_killer(const Hypergraph3& h, const ClusterLayout& layout, std::uint64_t seed,
                                     const KillerOptions& options) {
    if (h.cluster_map().empty()) throw std::invalid_argument("connector_killer needs a hypergraph with clusters");
    Rng rng(seed);
    std::vector<Colour> colours(h.num_triples(), Colour::blue);
    for (std::size_t i = 0; i < h.num_triples(); ++i) {
        if (!intra_cluster(h, h.triple(i)) && uniform_unit(rng) >= options.p_blue) colours[i] = Colour::red;
    }
    KillerResult out{TwoColoring(h, std::move(colours)), 0, 0};
    const auto& cl = layout.family.clusters;
    const Colour role = layout.family.role;
    auto budget_left = [&] { return !options.flip_budget || out.flips < *options.flip_budget; };
    auto flip_one = [&](std::initializer_list<std::array<Vertex, 3>> triples) {
        std::vector<std::array<Vertex, 3>> list(triples);
        const auto& pick = list[uniform_below(rng, list.size())];
        out.colouring.set(*h.index_of(pick[0], pick[1], pick[2]), opposite(role));
        ++out.flips;
    };
    for (const auto& [u, v] : layout.scope.pairs) {
        while (budget_left()) {
            auto conn = find_c22(h, out.colouring, role, cl.at(u), cl.at(v));
            if (!conn) break;
            const Gadget& g = conn->parts[0];
            flip_one({{g.x1, g.x2, g.y1}, {g.y1, g.y2, g.x1}});
        }
    }
    for (const auto& t : layout.scope.triples) {
        while (budget_left()) {
            auto conn = find_c212(h, out.colouring, role, cl.at(t.u), cl.at(t.v), cl.at(t.w));
            if (!conn) break;
            const Gadget& g = conn->parts[0];
            flip_one({{g.x1, g.x2, *g.z}, {g.x1, *g.z, g.y1}, {*g.z, g.y1, g.y2}});
        }
    }
    out.residual = count_live_connectors(h, out.colouring, layout);
    return out;
}

namespace {

std::string colourer_name(ColourerKind kind) {
    switch (kind) {
        case ColourerKind::uniform_random: return "uniform_random";
        case ColourerKind::all_blue: return "all_blue";
        case ColourerKind::all_red: return "all_red";
        case ColourerKind::connector_killer: return "connector_killer";
        case ColourerKind::cluster_mixer: return "cluster_mixer";
    }
    return "?";
}

void reject_unknown(const json& j, const std::string& where, std::initializer_list<const char*> known) {
    if (!j.is_object()) throw ConfigError(where + ": expected an object");
    for (const auto& [key, _] : j.items()) {
        if (std::none_of(known.begin(), known.end(), [&](const char* k) { return key == k; })) {
            throw ConfigError(where + (where.empty() ? "" : ".") + key + ": unknown field");
        }
    }
}

std::uint64_t count_field(const json& j, const std::string& where, const char* key, std::uint64_t fallback) {
    if (!j.contains(key)) return fallback;
    const auto& v = j.at(key);
    if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0)) {
        throw ConfigError(where + (where.empty() ? "" : ".") + key + ": expected a non-negative integer");
    }
    return v.get<std::uint64_t>();
}

std::string string_field(const json& j, const std::string& where, const char* key, std::string fallback) {
    if (!j.contains(key)) return fallback;
    if (!j.at(key).is_string()) throw ConfigError(where + (where.empty() ? "" : ".") + key + ": expected a string");
    return j.at(key).get<std::string>();
}

double probability(const json& v, const std::string& where) {
    if (!v.is_number()) throw ConfigError(where + ": expected a number in [0, 1]");
    const double p = v.get<double>();
    if (!(p >= 0.0 && p <= 1.0)) throw ConfigError(where + ": must lie in [0, 1]");
    return p;
}

}  // namespace

ExperimentConfig config_from_json(const json& j) {
    reject_unknown(j, "", {"params", "instance", "colourer", "trials", "seed", "oracle_cap", "workers", "report",
                           "dump_dir"});
    ExperimentConfig cfg;
    if (j.contains("params")) cfg.params = params_from_json(j.at("params"));
    if (j.contains("instance")) {
        const auto& in = j.at("instance");
        reject_unknown(in, "instance", {"source", "vertices", "power", "n", "a", "b", "seed", "eps", "graph"});
        auto& spec = cfg.instance;
        spec.source = string_field(in, "instance", "source", spec.source);
        if (spec.source == "cycle_power") {
            spec.vertices = count_field(in, "instance", "vertices", spec.vertices);
            spec.power = count_field(in, "instance", "power", spec.power);
        } else if (spec.source == "expander") {
            spec.vertices = count_field(in, "instance", "n", spec.vertices);
            spec.expander.a = count_field(in, "instance", "a", spec.expander.a);
            spec.expander.b = count_field(in, "instance", "b", spec.expander.b);
            spec.expander.seed = count_field(in, "instance", "seed", spec.expander.seed);
            if (in.contains("eps")) {
                try {
                    spec.expander.eps = Rational::parse(in.at("eps").get<std::string>());
                } catch (const std::exception& e) {
                    throw ConfigError(std::string("instance.eps: ") + e.what());
                }
            }
        } else if (spec.source == "file") {
            spec.graph_file = string_field(in, "instance", "graph", "");
            if (spec.graph_file.empty()) throw ConfigError("instance.graph: required for source 'file'");
        } else {
            throw ConfigError("instance.source: expected cycle_power, expander or file");
        }
    }
    if (j.contains("colourer")) {
        const auto& co = j.at("colourer");
        reject_unknown(co, "colourer", {"kind", "p_blue", "flip_budget"});
        const std::string kind = string_field(co, "colourer", "kind", "uniform_random");
        if (kind == "uniform_random") cfg.colourer.kind = ColourerKind::uniform_random;
        else if (kind == "all_blue") cfg.colourer.kind = ColourerKind::all_blue;
        else if (kind == "all_red") cfg.colourer.kind = ColourerKind::all_red;
        else if (kind == "connector_killer") cfg.colourer.kind = ColourerKind::connector_killer;
        else if (kind == "cluster_mixer") cfg.colourer.kind = ColourerKind::cluster_mixer;
        else throw ConfigError("colourer.kind: unknown colourer '" + kind + "'");
        if (co.contains("p_blue")) {
            const auto& p = co.at("p_blue");
            if (p.is_array()) {
                if (p.size() != 2) throw ConfigError("colourer.p_blue: expected a number or [lo, hi]");
                cfg.colourer.p_blue_lo = probability(p[0], "colourer.p_blue[0]");
                cfg.colourer.p_blue_hi = probability(p[1], "colourer.p_blue[1]");
                if (cfg.colourer.p_blue_lo > cfg.colourer.p_blue_hi) throw ConfigError("colourer.p_blue: lo exceeds hi");
            } else {
                cfg.colourer.p_blue_lo = cfg.colourer.p_blue_hi = probability(p, "colourer.p_blue");
            }
            cfg.colourer.killer.p_blue = cfg.colourer.p_blue_hi;
        } else if (cfg.colourer.kind == ColourerKind::connector_killer) {
            cfg.colourer.p_blue_lo = cfg.colourer.p_blue_hi = cfg.colourer.killer.p_blue;
        }
        if (co.contains("flip_budget")) cfg.colourer.killer.flip_budget = count_field(co, "colourer", "flip_budget", 0);
    }
    cfg.trials = count_field(j, "", "trials", cfg.trials);
    cfg.seed = count_field(j, "", "seed", cfg.seed);
    cfg.oracle_cap = count_field(j, "", "oracle_cap", cfg.oracle_cap);
    cfg.workers = count_field(j, "", "workers", cfg.workers);
    cfg.report_path = string_field(j, "", "report", "");
    cfg.dump_dir = string_field(j, "", "dump_dir", "");
    if (cfg.trials < 1) throw ConfigError("trials: must be at least 1");
    if (cfg.oracle_cap > 15) throw ConfigError("oracle_cap: must be at most 15");
    return cfg;
}

json config_to_json(const ExperimentConfig& cfg) {
    json instance{{"source", cfg.instance.source}};
    if (cfg.instance.source == "cycle_power") {
        instance["vertices"] = cfg.instance.vertices;
        instance["power"] = cfg.instance.power;
    } else if (cfg.instance.source == "expander") {
        instance["n"] = cfg.instance.vertices;
        instance["a"] = cfg.instance.expander.a;
        instance["b"] = cfg.instance.expander.b;
        instance["seed"] = cfg.instance.expander.seed;
        instance["eps"] = cfg.instance.expander.eps.to_string();
    } else {
        instance["graph"] = cfg.instance.graph_file;
    }
    json colourer{{"kind", colourer_name(cfg.colourer.kind)}};
    if (cfg.colourer.p_blue_lo == cfg.colourer.p_blue_hi) colourer["p_blue"] = cfg.colourer.p_blue_lo;
    else colourer["p_blue"] = {cfg.colourer.p_blue_lo, cfg.colourer.p_blue_hi};
    if (cfg.colourer.killer.flip_budget) colourer["flip_budget"] = *cfg.colourer.killer.flip_budget;
    json j{{"params", params_to_json(cfg.params)}, {"instance", std::move(instance)}, {"colourer", std::move(colourer)},
           {"trials", cfg.trials}, {"seed", cfg.seed}, {"oracle_cap", cfg.oracle_cap}, {"workers", cfg.workers}};
    if (!cfg.report_path.empty()) j["report"] = cfg.report_path;
    if (!cfg.dump_dir.empty()) j["dump_dir"] = cfg.dump_dir;
    return j;
}

Graph make_instance_graph(const InstanceSpec& spec) {
    if (spec.source == "cycle_power") return cycle_power(spec.vertices, spec.power);
    if (spec.source == "expander") return sample_expander(spec.expander, spec.vertices);
    if (spec.source == "file") {
        std::ifstream in(spec.graph_file);
        if (!in) throw IoError("cannot open graph file '" + spec.graph_file + "'");
        return read_graph(in);
    }
    throw ConfigError("instance.source: expected cycle_power, expander or file");
}

std::size_t RunReport::hard_faults() const {
    return std::count_if(rows.begin(), rows.end(), [](const TrialRow& r) { return !r.hard_fault.empty(); });
}

std::size_t RunReport::successes() const {
    return std::count_if(rows.begin(), rows.end(), [](const TrialRow& r) { return r.outcome && r.outcome->success(); });
}

std::size_t RunReport::oracle_violations() const {
    return std::count_if(rows.begin(), rows.end(), [](const TrialRow& r) {
        return r.oracle && r.outcome && r.outcome->success() && r.outcome->path.size() > r.oracle->path.size();
    });
}

json RunReport::to_json() const {
    json trials = json::array();
    json timings = json::array();
    std::map<std::string, std::size_t> failures;
    std::size_t blue_branch = 0, red_branch = 0, oracle_checked = 0;
    for (const auto& r : rows) {
        json row{{"index", r.index}, {"seed", r.seed}, {"p_blue", r.p_blue}};
        if (config.colourer.kind == ColourerKind::connector_killer) {
            row["killer"] = {{"flips", r.killer_flips}, {"residual", r.killer_residual}};
        }
        if (!r.hard_fault.empty()) row["hard_fault"] = r.hard_fault;
        if (r.outcome) {
            json o = outcome_to_json(*r.outcome);
            timings.push_back(o["timings"]);
            o.erase("timings");
            row["outcome"] = std::move(o);
            if (r.outcome->failure) ++failures[failure_kind_name(r.outcome->failure->kind)];
            if (r.outcome->trace.branch == "blue") ++blue_branch;
            if (r.outcome->trace.branch == "red") ++red_branch;
        } else {
            timings.push_back(json::object());
        }
        if (r.oracle) {
            ++oracle_checked;
            const bool dominated = !(r.outcome && r.outcome->success()) || r.outcome->path.size() <= r.oracle->path.size();
            row["oracle"] = {{"length", r.oracle->path.size()},
                             {"colour", colour_name(r.oracle->colour)},
                             {"dominates", dominated}};
        }
        trials.push_back(std::move(row));
    }
    return {
        {"config", config_to_json(config)},
        {"instance",
         {{"graph_vertices", graph_vertices},
          {"graph_edges", graph_edges},
          {"hypergraph_vertices", hypergraph_vertices},
          {"triples", triples}}},
        {"trials", std::move(trials)},
        {"aggregate",
         {{"trials", rows.size()},
          {"successes", successes()},
          {"hard_faults", hard_faults()},
          {"failures", failures},
          {"blue_branch", blue_branch},
          {"red_branch", red_branch},
          {"oracle_checked", oracle_checked},
          {"oracle_violations", oracle_violations()}}},
        {"timings", {{"trials", std::move(timings)}}},
    };
}

namespace {

TrialRow run_trial(const ExperimentConfig& cfg, const HostInstance& host, const ClusterLayout& layout,
                   std::size_t index) {
    TrialRow row;
    row.index = index;
    row.seed = derive_seed(cfg.seed, index);
    Rng bias(derive_seed(row.seed, 1));
    const auto& co = cfg.colourer;
    row.p_blue = co.p_blue_lo + (co.p_blue_hi - co.p_blue_lo) * uniform_unit(bias);

    TwoColoring colouring;
    switch (co.kind) {
        case ColourerKind::uniform_random: colouring = colour_uniform_random(host.h, row.p_blue, row.seed); break;
        case ColourerKind::all_blue: colouring = TwoColoring(host.h, Colour::blue); break;
        case ColourerKind::all_red: colouring = TwoColoring(host.h, Colour::red); break;
        case ColourerKind::cluster_mixer: colouring = colour_cluster_mixer(host.h, row.seed); break;
        case ColourerKind::connector_killer: {
            KillerOptions opts = co.killer;
            opts.p_blue = row.p_blue;
            auto killed = colour_connector_killer(host.h, layout, row.seed, opts);
            row.killer_flips = killed.flips;
            row.killer_residual = killed.residual;
            colouring = std::move(killed.colouring);
            break;
        }
    }
    try {
        row.outcome = extract_mono_tight_path(host, cfg.params, colouring);
    } catch (const HardFault& e) {
        row.hard_fault = e.what();
    }
    if (host.h.num_vertices() <= cfg.oracle_cap) {
        row.oracle = brute_force_longest_mono_tight_path(host.h, colouring, host.h.num_vertices());
    }
    if (!cfg.dump_dir.empty()) {
        const std::filesystem::path dir(cfg.dump_dir);
        std::ofstream col(dir / ("colouring_" + std::to_string(index) + ".txt"));
        write_colouring(col, host.h, colouring);
        if (row.outcome && row.outcome->success()) {
            std::ofstream path(dir / ("path_" + std::to_string(index) + ".txt"));
            write_tight_path(path, row.outcome->path, *row.outcome->colour);
        }
        if (!col) throw IoError("cannot write dumps to '" + cfg.dump_dir + "'");
    }
    return row;
}

}  // namespace

RunReport run_experiment(const ExperimentConfig& cfg) {
    if (cfg.trials < 1) throw ConfigError("trials: must be at least 1");
    if (cfg.oracle_cap > 15) throw ConfigError("oracle_cap: must be at most 15");
    try {
        check_params(cfg.params);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("params: ") + e.what());
    }
    const Graph g = make_instance_graph(cfg.instance);
    const HostInstance host = build_host(g, cfg.params.k, cfg.params.t_prime);
    const ClusterLayout layout = cluster_layout(host);

    if (!cfg.dump_dir.empty()) {
        const std::filesystem::path dir(cfg.dump_dir);
        std::filesystem::create_directories(dir);
        std::ofstream gout(dir / "graph.txt"), hout(dir / "hypergraph.txt");
        write_graph(gout, g);
        write_hypergraph(hout, host.h);
        if (!gout || !hout) throw IoError("cannot write dumps to '" + cfg.dump_dir + "'");
    }

    RunReport report;
    report.config = cfg;
    report.graph_vertices = g.num_vertices();
    report.graph_edges = g.num_edges();
    report.hypergraph_vertices = host.h.num_vertices();
    report.triples = host.h.num_triples();
    report.rows.resize(cfg.trials);

    std::size_t workers = cfg.workers ? cfg.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, cfg.trials);
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        for (std::size_t i = next++; i < cfg.trials; i = next++) {
            try {
                report.rows[i] = run_trial(cfg, host, layout, i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);

    if (!cfg.report_path.empty()) {
        std::ofstream out(cfg.report_path);
        out << report.to_json().dump(2) << '\n';
        if (!out) throw IoError("cannot write report to '" + cfg.report_path + "'");
    }
    return report;
}

}  // namespace tightpath
