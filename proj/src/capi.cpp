#include "tightpath/tightpath.h"

#include <cstring>
#include <fstream>
#include <memory>
#include <string>

#include "tightpath/extraction.hpp"
#include "tightpath/harness.hpp"
#include "tightpath/report.hpp"

using namespace tightpath;
using nlohmann::json;

struct tp_graph {
    Graph g;
};

struct tp_hypergraph {
    const Hypergraph3* h = nullptr;
    std::unique_ptr<Hypergraph3> owned;
};

struct tp_colouring {
    TwoColoring c;
};

struct tp_instance {
    HostInstance host;
    PipelineParams params;
    ClusterLayout layout;
    tp_hypergraph view;
};

namespace {

thread_local std::string last_error;

tp_status fail(tp_status status, const std::string& message) {
    last_error = message;
    return status;
}

// Runs `body` and maps exceptions onto status codes.
template <class Body>
tp_status guarded(Body&& body) {
    try {
        last_error.clear();
        return body();
    } catch (const HardFault& e) {
        return fail(TP_HARD_FAULT, e.what());
    } catch (const ParseError& e) {
        return fail(TP_PARSE, e.what());
    } catch (const json::parse_error& e) {
        return fail(TP_PARSE, e.what());
    } catch (const IoError& e) {
        return fail(TP_IO, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(TP_INVALID_ARGUMENT, e.what());
    } catch (const std::out_of_range& e) {
        return fail(TP_INVALID_ARGUMENT, e.what());
    } catch (const std::overflow_error& e) {
        return fail(TP_INVALID_ARGUMENT, e.what());
    } catch (const json::exception& e) {
        return fail(TP_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(TP_INTERNAL, e.what());
    } catch (...) {
        return fail(TP_INTERNAL, "unknown exception");
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require(const void* p, const char* what) {
    if (!p) throw std::invalid_argument(std::string(what) + " must not be NULL");
}

std::ifstream open_in(const char* path) {
    require(path, "path");
    std::ifstream in(path);
    if (!in) throw IoError(std::string("cannot open '") + path + "' for reading");
    return in;
}

std::ofstream open_out(const char* path) {
    require(path, "path");
    std::ofstream out(path);
    if (!out) throw IoError(std::string("cannot open '") + path + "' for writing");
    return out;
}

void close_out(std::ofstream& out, const char* path) {
    out.close();
    if (!out) throw IoError(std::string("write to '") + path + "' failed");
}

tp_graph* wrap(Graph g) { return new tp_graph{std::move(g)}; }

const Hypergraph3& hyper(const tp_hypergraph* h) {
    require(h, "hypergraph");
    return *h->h;
}

const TwoColoring& colouring_for(const tp_colouring* c, const Hypergraph3& h) {
    require(c, "colouring");
    if (c->c.size() != h.num_triples()) throw std::invalid_argument("colouring belongs to a different hypergraph");
    return c->c;
}

}  // namespace

extern "C" {

const char* tp_last_error(void) { return last_error.c_str(); }

const char* tp_status_name(tp_status status) {
    switch (status) {
        case TP_OK: return "ok";
        case TP_INVALID_ARGUMENT: return "invalid_argument";
        case TP_HYPOTHESIS: return "hypothesis";
        case TP_HARD_FAULT: return "hard_fault";
        case TP_IO: return "io";
        case TP_PARSE: return "parse";
        case TP_INTERNAL: return "internal";
    }
    return "unknown";
}

const char* tp_version(void) { return "1.0.0"; }

void tp_string_free(char* text) { std::free(text); }

tp_status tp_graph_sample_expander(uint64_t n, uint64_t a, uint64_t b, uint64_t seed, tp_graph** out) {
    return guarded([&] {
        require(out, "out");
        ExpanderParams params;
        params.a = a;
        params.b = b;
        params.seed = seed;
        *out = wrap(sample_expander(params, n));
        return TP_OK;
    });
}

tp_status tp_graph_cycle_power(uint64_t n, uint64_t r, tp_graph** out) {
    return guarded([&] {
        require(out, "out");
        *out = wrap(cycle_power(n, r));
        return TP_OK;
    });
}

tp_status tp_graph_load(const char* path, tp_graph** out) {
    return guarded([&] {
        require(out, "out");
        auto in = open_in(path);
        *out = wrap(read_graph(in));
        return TP_OK;
    });
}

tp_status tp_graph_save(const tp_graph* g, const char* path) {
    return guarded([&] {
        require(g, "graph");
        auto out = open_out(path);
        write_graph(out, g->g);
        close_out(out, path);
        return TP_OK;
    });
}

tp_status tp_graph_info(const tp_graph* g, uint64_t* vertices, uint64_t* edges, uint64_t* max_degree) {
    return guarded([&] {
        require(g, "graph");
        if (vertices) *vertices = g->g.num_vertices();
        if (edges) *edges = g->g.num_edges();
        if (max_degree) *max_degree = g->g.max_degree();
        return TP_OK;
    });
}

tp_status tp_graph_power(const tp_graph* g, uint64_t k, tp_graph** out) {
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        *out = wrap(graph_power(g->g, k));
        return TP_OK;
    });
}

tp_status tp_graph_blow_up(const tp_graph* g, uint64_t t, tp_graph** out) {
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        BlowUp b = blow_up(g->g, t);
        std::vector<std::uint32_t> labels(b.cluster_map.begin(), b.cluster_map.end());
        *out = wrap(b.graph.with_labels(std::move(labels)));
        return TP_OK;
    });
}

void tp_graph_free(tp_graph* g) { delete g; }

tp_status tp_certify_p1(const tp_graph* g, const char* eps, uint64_t n, const char* mode, uint64_t trials,
                        uint64_t seed, int* passed, char** report_json) {
    return guarded([&] {
        require(g, "graph");
        require(eps, "eps");
        CertifyOptions options;
        const std::string m = mode ? mode : "spectral";
        if (m == "spectral") options.mode = CertificationMode::spectral;
        else if (m == "sampled") options.mode = CertificationMode::sampled;
        else throw std::invalid_argument("mode must be 'spectral' or 'sampled'");
        if (trials) options.trials = trials;
        options.seed = seed;
        const auto cert = certify_p1(g->g, Rational::parse(eps), n, options);
        if (passed) *passed = cert.passed ? 1 : 0;
        if (report_json) *report_json = dup_string(certificate_to_json(cert).dump(2));
        return TP_OK;
    });
}

tp_status tp_instance_create(const tp_graph* g, const char* params_json, tp_instance** out) {
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        PipelineParams params;
        if (params_json) params = params_from_json(json::parse(params_json));
        check_params(params);
        auto inst = std::make_unique<tp_instance>();
        inst->params = params;
        inst->host = build_host(g->g, params.k, params.t_prime);
        inst->layout = cluster_layout(inst->host);
        inst->view.h = &inst->host.h;
        *out = inst.release();
        return TP_OK;
    });
}

const tp_hypergraph* tp_instance_hypergraph(const tp_instance* inst) { return inst ? &inst->view : nullptr; }

void tp_instance_free(tp_instance* inst) { delete inst; }

tp_status tp_hypergraph_load(const char* path, tp_hypergraph** out) {
    return guarded([&] {
        require(out, "out");
        auto in = open_in(path);
        auto h = std::make_unique<tp_hypergraph>();
        h->owned = std::make_unique<Hypergraph3>(read_hypergraph(in));
        h->h = h->owned.get();
        *out = h.release();
        return TP_OK;
    });
}

tp_status tp_hypergraph_save(const tp_hypergraph* h, const char* path) {
    return guarded([&] {
        const auto& hg = hyper(h);
        auto out = open_out(path);
        write_hypergraph(out, hg);
        close_out(out, path);
        return TP_OK;
    });
}

tp_status tp_hypergraph_info(const tp_hypergraph* h, uint64_t* vertices, uint64_t* triples) {
    return guarded([&] {
        const auto& hg = hyper(h);
        if (vertices) *vertices = hg.num_vertices();
        if (triples) *triples = hg.num_triples();
        return TP_OK;
    });
}

void tp_hypergraph_free(tp_hypergraph* h) {
    // Borrowed views belong to their instance.
    if (h && h->owned) delete h;
}

tp_status tp_colour(const tp_instance* inst, const char* colourer_json, uint64_t seed, tp_colouring** out,
                    char** info_json) {
    return guarded([&] {
        require(inst, "instance");
        require(out, "out");
        json spec = colourer_json ? json::parse(colourer_json) : json{{"kind", "uniform_random"}};
        const ExperimentConfig cfg = config_from_json(json{{"colourer", spec}});
        const auto& co = cfg.colourer;
        const Hypergraph3& h = inst->host.h;
        json info{{"kind", spec.value("kind", "uniform_random")}, {"seed", seed}};
        TwoColoring c;
        switch (co.kind) {
            case ColourerKind::uniform_random: c = colour_uniform_random(h, co.p_blue_lo, seed); break;
            case ColourerKind::all_blue: c = TwoColoring(h, Colour::blue); break;
            case ColourerKind::all_red: c = TwoColoring(h, Colour::red); break;
            case ColourerKind::cluster_mixer: c = colour_cluster_mixer(h, seed); break;
            case ColourerKind::connector_killer: {
                auto killed = colour_connector_killer(h, inst->layout, seed, co.killer);
                info["flips"] = killed.flips;
                info["residual"] = killed.residual;
                c = std::move(killed.colouring);
                break;
            }
        }
        *out = new tp_colouring{std::move(c)};
        if (info_json) *info_json = dup_string(info.dump(2));
        return TP_OK;
    });
}

tp_status tp_colouring_load(const tp_hypergraph* h, const char* path, tp_colouring** out) {
    return guarded([&] {
        const auto& hg = hyper(h);
        require(out, "out");
        auto in = open_in(path);
        *out = new tp_colouring{read_colouring(in, hg)};
        return TP_OK;
    });
}

tp_status tp_colouring_save(const tp_hypergraph* h, const tp_colouring* c, const char* path) {
    return guarded([&] {
        const auto& hg = hyper(h);
        const auto& col = colouring_for(c, hg);
        auto out = open_out(path);
        write_colouring(out, hg, col);
        close_out(out, path);
        return TP_OK;
    });
}

tp_status tp_colouring_swap(tp_colouring* c) {
    return guarded([&] {
        require(c, "colouring");
        c->c = c->c.swapped();
        return TP_OK;
    });
}

void tp_colouring_free(tp_colouring* c) { delete c; }

tp_status tp_extract(const tp_instance* inst, const tp_colouring* c, char** report_json) {
    return guarded([&] {
        require(inst, "instance");
        const auto& col = colouring_for(c, inst->host.h);
        const PipelineOutcome outcome = extract_mono_tight_path(inst->host, inst->params, col);
        if (report_json) *report_json = dup_string(outcome_to_json(outcome).dump(2));
        if (outcome.failure) {
            last_error = failure_kind_name(outcome.failure->kind) + ": " + outcome.failure->detail;
            return TP_HYPOTHESIS;
        }
        return TP_OK;
    });
}

tp_status tp_path_save(const char* path, const uint32_t* vertices, size_t count, char colour) {
    return guarded([&] {
        if (count) require(vertices, "vertices");
        const Colour col = parse_colour(std::string(1, colour));
        auto out = open_out(path);
        write_tight_path(out, TightPath3{std::vector<Vertex>(vertices, vertices + count)}, col);
        close_out(out, path);
        return TP_OK;
    });
}

tp_status tp_validate_path(const tp_hypergraph* h, const tp_colouring* c, const char* path_file, int* ok,
                           char** verdict_json) {
    return guarded([&] {
        const auto& hg = hyper(h);
        const auto& col = colouring_for(c, hg);
        auto in = open_in(path_file);
        const auto [path, colour] = read_tight_path(in);
        const PathVerdict verdict = validate_tight_path(hg, col, path, colour);
        if (ok) *ok = verdict.ok ? 1 : 0;
        if (verdict_json) {
            json j{{"ok", verdict.ok}, {"colour", colour_name(colour)}, {"length", path.size()}};
            if (!verdict.ok) {
                j["position"] = verdict.position;
                j["reason"] = verdict.reason;
            }
            *verdict_json = dup_string(j.dump(2));
        }
        return TP_OK;
    });
}

tp_status tp_run_experiment(const char* config_json, char** report_json, uint64_t* hard_faults) {
    return guarded([&] {
        require(config_json, "config_json");
        const ExperimentConfig cfg = config_from_json(json::parse(config_json));
        const RunReport report = run_experiment(cfg);
        if (hard_faults) *hard_faults = report.hard_faults();
        if (report_json) *report_json = dup_string(report.to_json().dump(2));
        return TP_OK;
    });
}

}  // extern "C"
