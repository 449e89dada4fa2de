// Command-line front end. Talks to the library only through tightpath.h.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "tightpath/tightpath.h"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitHypothesis = 2;
constexpr int kExitHardFault = 3;
constexpr int kExitIo = 4;

struct Failure {
    int code;
    std::string message;
};

int exit_code(tp_status s) {
    switch (s) {
        case TP_OK: return kExitOk;
        case TP_HYPOTHESIS: return kExitHypothesis;
        case TP_HARD_FAULT:
        case TP_INTERNAL: return kExitHardFault;
        default: return kExitIo;
    }
}

void check(tp_status s) {
    if (s != TP_OK) throw Failure{exit_code(s), std::string(tp_status_name(s)) + ": " + tp_last_error()};
}

struct Owned {
    char* text = nullptr;
    ~Owned() { tp_string_free(text); }
    std::string str() const { return text ? text : ""; }
};

template <class T, void (*Free)(T*)>
struct Handle {
    T* p = nullptr;
    Handle() = default;
    Handle(const Handle&) = delete;
    Handle& operator=(const Handle&) = delete;
    ~Handle() { Free(p); }
};

using GraphHandle = Handle<tp_graph, tp_graph_free>;
using InstanceHandle = Handle<tp_instance, tp_instance_free>;
using ColouringHandle = Handle<tp_colouring, tp_colouring_free>;
using HypergraphHandle = Handle<tp_hypergraph, tp_hypergraph_free>;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Failure{kExitIo, "cannot open '" + path + "'"};
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text << '\n';
    if (!out) throw Failure{kExitIo, "cannot write '" + path + "'"};
}

json parse_json(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw Failure{kExitIo, what + ": " + e.what()};
    }
}

// Params file (or defaults) with the command-line overrides applied.
std::string params_text(const std::string& path, bool strict) {
    json p = path.empty() ? json::object() : parse_json(read_file(path), path);
    if (strict) p["strict_constants"] = true;
    return p.dump();
}

void load_instance(const std::string& graph, const std::string& params, bool strict, InstanceHandle& inst) {
    GraphHandle g;
    check(tp_graph_load(graph.c_str(), &g.p));
    check(tp_instance_create(g.p, params_text(params, strict).c_str(), &inst.p));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monochromatic tight paths in 2-coloured triangle hypergraphs"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    std::string params_file, report_file;
    bool strict = false;
    std::optional<std::uint64_t> oracle_cap;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--seed", seed, "Random seed");
        cmd->add_option("--params", params_file, "Pipeline parameters (JSON)");
        cmd->add_flag("--strict-constants", strict, "Enforce the exact constant identities");
        cmd->add_option("--report", report_file, "Write the JSON report here");
    };

    // sample
    auto* sample = app.add_subcommand("sample", "Emit an expander or cycle power, optionally with its hypergraph");
    std::string kind = "expander", graph_out, hyper_out;
    std::uint64_t n = 20, a = 1, b = 4, r = 2;
    sample->add_option("--kind", kind, "expander | cycle_power")->check(CLI::IsMember({"expander", "cycle_power"}));
    sample->add_option("--n", n, "Vertex count parameter");
    sample->add_option("-a", a, "Expander: vertices per unit of n");
    sample->add_option("-b", b, "Expander: degree");
    sample->add_option("-r", r, "Cycle power: reach");
    sample->add_option("--graph-out", graph_out, "Graph file to write")->required();
    sample->add_option("--hypergraph-out", hyper_out, "Also write the triangle hypergraph of the blown-up power");
    add_common(sample);

    // certify
    auto* certify = app.add_subcommand("certify", "Expansion certificate for a graph");
    std::string graph_in, eps = "1/5", mode = "spectral";
    std::uint64_t cert_n = 0, trials = 1000;
    certify->add_option("--graph", graph_in, "Graph file")->required();
    certify->add_option("--eps", eps, "Set-size fraction, e.g. 1/5");
    certify->add_option("--n", cert_n, "Scale n (default: vertex count)");
    certify->add_option("--mode", mode, "spectral | sampled")->check(CLI::IsMember({"spectral", "sampled"}));
    certify->add_option("--trials", trials, "Sampled pairs");
    add_common(certify);

    // colour
    auto* colour = app.add_subcommand("colour", "Colour the hypergraph of an instance");
    std::string colourer = "uniform_random", colouring_out;
    colour->add_option("--graph", graph_in, "Graph file")->required();
    colour->add_option("--colourer", colourer, "Colourer kind or JSON spec");
    colour->add_option("--out", colouring_out, "Colouring file to write")->required();
    colour->add_option("--hypergraph-out", hyper_out, "Also write the hypergraph");
    add_common(colour);

    // extract
    auto* extract = app.add_subcommand("extract", "Run the pipeline on an instance and a colouring");
    std::string colouring_in, path_out;
    extract->add_option("--graph", graph_in, "Graph file")->required();
    extract->add_option("--colouring", colouring_in, "Colouring file")->required();
    extract->add_option("--path-out", path_out, "Write the tight path here");
    add_common(extract);

    // experiment
    auto* experiment = app.add_subcommand("experiment", "Config-driven batch of trials");
    std::string config_file;
    experiment->add_option("--config", config_file, "Experiment config (JSON)")->required();
    experiment->add_option("--oracle-cap", oracle_cap, "Brute-force cross-check threshold (<= 15)");
    add_common(experiment);

    // validate
    auto* validate = app.add_subcommand("validate", "Re-check a path file against a colouring");
    std::string hyper_in, path_in;
    validate->add_option("--hypergraph", hyper_in, "Hypergraph file (or use --graph with --params)");
    validate->add_option("--graph", graph_in, "Graph file to rebuild the hypergraph from");
    validate->add_option("--colouring", colouring_in, "Colouring file")->required();
    validate->add_option("--path", path_in, "Path file")->required();
    add_common(validate);

    CLI11_PARSE(app, argc, argv);

    try {
        if (sample->parsed()) {
            GraphHandle g;
            if (kind == "expander") check(tp_graph_sample_expander(n, a, b, seed, &g.p));
            else check(tp_graph_cycle_power(n, r, &g.p));
            check(tp_graph_save(g.p, graph_out.c_str()));
            std::uint64_t v = 0, e = 0, d = 0;
            check(tp_graph_info(g.p, &v, &e, &d));
            std::cout << "graph: " << v << " vertices, " << e << " edges, max degree " << d << '\n';
            if (!hyper_out.empty()) {
                InstanceHandle inst;
                check(tp_instance_create(g.p, params_text(params_file, strict).c_str(), &inst.p));
                const tp_hypergraph* h = tp_instance_hypergraph(inst.p);
                check(tp_hypergraph_save(h, hyper_out.c_str()));
                std::uint64_t hv = 0, ht = 0;
                check(tp_hypergraph_info(h, &hv, &ht));
                std::cout << "hypergraph: " << hv << " vertices, " << ht << " triples\n";
            }
            return kExitOk;
        }
        if (certify->parsed()) {
            GraphHandle g;
            check(tp_graph_load(graph_in.c_str(), &g.p));
            std::uint64_t v = 0;
            check(tp_graph_info(g.p, &v, nullptr, nullptr));
            int passed = 0;
            Owned out;
            check(tp_certify_p1(g.p, eps.c_str(), cert_n ? cert_n : v, mode.c_str(), trials, seed, &passed, &out.text));
            std::cout << out.str() << '\n';
            if (!report_file.empty()) write_file(report_file, out.str());
            return passed ? kExitOk : kExitHypothesis;
        }
        if (colour->parsed()) {
            InstanceHandle inst;
            load_instance(graph_in, params_file, strict, inst);
            const std::string spec = !colourer.empty() && colourer.front() == '{' ? colourer
                                                                                : json{{"kind", colourer}}.dump();
            ColouringHandle c;
            Owned info;
            check(tp_colour(inst.p, spec.c_str(), seed, &c.p, &info.text));
            const tp_hypergraph* h = tp_instance_hypergraph(inst.p);
            check(tp_colouring_save(h, c.p, colouring_out.c_str()));
            if (!hyper_out.empty()) check(tp_hypergraph_save(h, hyper_out.c_str()));
            std::cout << info.str() << '\n';
            return kExitOk;
        }
        if (extract->parsed()) {
            InstanceHandle inst;
            load_instance(graph_in, params_file, strict, inst);
            ColouringHandle c;
            check(tp_colouring_load(tp_instance_hypergraph(inst.p), colouring_in.c_str(), &c.p));
            Owned report;
            const tp_status s = tp_extract(inst.p, c.p, &report.text);
            if (s != TP_OK && s != TP_HYPOTHESIS) check(s);
            const json j = parse_json(report.str(), "report");
            if (!report_file.empty()) write_file(report_file, report.str());
            if (s == TP_HYPOTHESIS) {
                std::cout << "failure " << j["failure"]["kind"].get<std::string>() << ": "
                          << j["failure"]["detail"].get<std::string>() << '\n';
                return kExitHypothesis;
            }
            const auto path = j["path"].get<std::vector<std::uint32_t>>();
            const char col = j["colour"].get<std::string>() == "red" ? 'R' : 'B';
            std::cout << j["colour"].get<std::string>() << " tight path on " << path.size() << " vertices via the "
                      << j["trace"]["branch"].get<std::string>() << " branch\n";
            if (!path_out.empty()) check(tp_path_save(path_out.c_str(), path.data(), path.size(), col));
            return kExitOk;
        }
        if (experiment->parsed()) {
            json cfg = parse_json(read_file(config_file), config_file);
            if (experiment->count("--seed")) cfg["seed"] = seed;
            if (!report_file.empty()) cfg["report"] = report_file;
            if (oracle_cap) cfg["oracle_cap"] = *oracle_cap;
            if (strict) cfg["params"]["strict_constants"] = true;
            if (!params_file.empty()) cfg["params"] = parse_json(params_text(params_file, strict), params_file);
            Owned report;
            std::uint64_t faults = 0;
            check(tp_run_experiment(cfg.dump().c_str(), &report.text, &faults));
            const json j = parse_json(report.str(), "report");
            std::cout << j["aggregate"].dump(2) << '\n';
            return faults ? kExitHardFault : kExitOk;
        }
        if (validate->parsed()) {
            InstanceHandle inst;
            HypergraphHandle loaded;
            const tp_hypergraph* h = nullptr;
            if (!hyper_in.empty()) {
                check(tp_hypergraph_load(hyper_in.c_str(), &loaded.p));
                h = loaded.p;
            } else if (!graph_in.empty()) {
                load_instance(graph_in, params_file, strict, inst);
                h = tp_instance_hypergraph(inst.p);
            } else {
                throw Failure{kExitIo, "validate needs --hypergraph or --graph"};
            }
            ColouringHandle c;
            check(tp_colouring_load(h, colouring_in.c_str(), &c.p));
            int ok = 0;
            Owned verdict;
            check(tp_validate_path(h, c.p, path_in.c_str(), &ok, &verdict.text));
            std::cout << verdict.str() << '\n';
            return ok ? kExitOk : kExitHypothesis;
        }
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << '\n';
        return f.code;
    }
    return kExitIo;
}
