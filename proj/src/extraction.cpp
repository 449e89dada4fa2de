#include <algorithm>
#include <chrono>
#include <limits>

#include "tightpath/extraction.hpp"

namespace tightpath {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) throw std::overflow_error("constant overflows 64 bits");
    return a * b;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    if (b > std::numeric_limits<std::uint64_t>::max() - a) throw std::overflow_error("constant overflows 64 bits");
    return a + b;
}

}  // namespace

std::uint64_t deletion_budget(std::uint64_t k) {
    return checked_add(checked_mul(4, checked_mul(2, k)), checked_mul(10, checked_mul(4, checked_mul(k, k))));
}

std::uint64_t paper_t(std::uint64_t k) { return checked_add(checked_add(checked_mul(8, k), checked_mul(40, checked_mul(k, k))), 5); }

std::optional<std::uint64_t> paper_a(std::uint64_t k) {
    std::uint64_t a = 2;
    for (std::uint64_t i = 0; i < k; ++i) {
        if (a > std::numeric_limits<std::uint64_t>::max() / 5) return std::nullopt;
        a *= 5;
    }
    return a;
}

std::vector<std::string> constant_violations(const PipelineParams& p) {
    std::vector<std::string> out;
    if (p.k != 2 * p.ell) out.push_back("k must equal 2*ell");
    if (!(p.eps == Rational(1, static_cast<std::int64_t>(p.k) + 1))) out.push_back("eps must equal 1/(k+1)");
    try {
        if (p.t != paper_t(p.k)) out.push_back("t must equal 8k + 40k^2 + 5");
        if (p.t < 5 || deletion_budget(p.k) != p.t - 5) out.push_back("deletion budget must equal t - 5");
    } catch (const std::overflow_error&) {
        out.push_back("k too large for 64-bit constants");
    }
    // 2*5^k leaves 64 bits for k >= 27; the identity is then left unchecked.
    if (auto a = paper_a(p.k); a && p.a != *a) out.push_back("a must equal 2*5^k");
    return out;
}

void check_params(const PipelineParams& p) {
    if (p.ell < 2) throw std::invalid_argument("ell must be at least 2");
    if (p.k < 2 * p.ell) throw std::invalid_argument("k must be at least 2*ell");
    if (p.n < 2) throw std::invalid_argument("n must be at least 2");
    if (p.t == 0 || p.t_prime == 0 || p.c == 0 || p.a == 0) throw std::invalid_argument("t, t', c, a must be positive");
    if (p.t > p.t_prime) throw std::invalid_argument("t must not exceed t'");
    if (p.eps.num() <= 0 || !(p.eps < Rational(1, 1))) throw std::invalid_argument("eps must lie in (0, 1)");
    if (p.strict_constants) {
        auto bad = constant_violations(p);
        if (!bad.empty()) {
            std::string msg = "strict constants violated:";
            for (const auto& b : bad) msg += " " + b + ";";
            throw std::invalid_argument(msg);
        }
    }
}

HostInstance build_host(const Graph& g, std::uint64_t k, std::uint64_t t_prime) {
    if (k == 0 || t_prime == 0) throw std::invalid_argument("build_host: k and t' must be positive");
    if (checked_mul(g.num_vertices(), t_prime) > kMaxHypergraphVertices) {
        throw std::invalid_argument("build_host: blow-up exceeds the hypergraph vertex cap");
    }
    HostInstance host;
    host.g = g;
    host.power = graph_power(g, k);
    host.blown = blow_up(host.power, t_prime);
    host.h = triangles_to_hypergraph(host.blown.graph, host.blown.cluster_map);
    return host;
}

std::string failure_kind_name(FailureKind kind) {
    switch (kind) {
        case FailureKind::cluster_ramsey: return "cluster_ramsey";
        case FailureKind::p1_certificate_absent: return "p1_certificate_absent";
        case FailureKind::obstruction_undersized: return "obstruction_undersized";
        case FailureKind::alternating_path_budget: return "alternating_path_budget";
        case FailureKind::alternating_path_absent: return "alternating_path_absent";
        case FailureKind::pruning_underflow: return "pruning_underflow";
        case FailureKind::window_hypothesis: return "window_hypothesis";
        case FailureKind::quadruple_extension: return "quadruple_extension";
    }
    return "unknown";
}

namespace {

class StageClock {
public:
    explicit StageClock(PipelineTrace& trace) : trace_(trace), start_(std::chrono::steady_clock::now()) {}

    void lap(const char* stage) {
        const auto now = std::chrono::steady_clock::now();
        trace_.timings_ms.emplace_back(stage, std::chrono::duration<double, std::milli>(now - start_).count());
        start_ = now;
    }

private:
    PipelineTrace& trace_;
    std::chrono::steady_clock::time_point start_;
};

PipelineOutcome& fail(PipelineOutcome& out, FailureKind kind, std::string detail) {
    out.failure = PipelineFailure{kind, std::move(detail)};
    return out;
}

void finish(PipelineOutcome& out, const Hypergraph3& h, const TwoColoring& c, Colour colour, TightPath3 path,
            std::size_t n) {
    out.verdict = validate_tight_path(h, c, path, colour);
    if (!out.verdict) throw HardFault("pipeline output fails validation: " + out.verdict.reason);
    if (path.size() < n) throw HardFault("pipeline output shorter than n");
    out.colour = colour;
    out.path = std::move(path);
}

}  // namespace

PipelineOutcome extract_mono_tight_path(const HostInstance& host, const PipelineParams& params, const TwoColoring& c) {
    check_params(params);
    if (c.size() != host.h.num_triples()) throw std::invalid_argument("colouring does not match the host hypergraph");
    if (host.blown.cluster_size != params.t_prime || host.g.num_vertices() != host.power.num_vertices()) {
        throw std::invalid_argument("host instance was built with a different t'");
    }

    PipelineOutcome out;
    PipelineTrace& trace = out.trace;
    StageClock clock(trace);
    const Hypergraph3& h = host.h;
    const std::size_t origins = host.g.num_vertices();

    // Monochromatic K_t per cluster; the colour covering more clusters plays blue.
    std::vector<std::optional<MonoClique>> blue(origins), red(origins);
    std::optional<Vertex> first_bad;
    for (Vertex v = 0; v < origins; ++v) {
        const VertexSet cluster = host.blown.cluster(v);
        blue[v] = find_mono_clique_of_colour(h, c, cluster, params.t, Colour::blue);
        red[v] = find_mono_clique_of_colour(h, c, cluster, params.t, Colour::red);
        trace.blue_clusters += blue[v].has_value();
        trace.red_clusters += red[v].has_value();
        if (!blue[v] && !red[v] && !first_bad) first_bad = v;
    }
    clock.lap("cliques");
    if (first_bad) {
        return fail(out, FailureKind::cluster_ramsey,
                    "cluster of origin " + std::to_string(*first_bad) + " has no monochromatic K_" +
                        std::to_string(params.t));
    }
    const Colour role = trace.blue_clusters > trace.red_clusters   ? Colour::blue
                        : trace.red_clusters > trace.blue_clusters ? Colour::red
                                                                   : params.tie_break;
    trace.role = role;

    ClusterFamily family{role, {}};
    std::vector<Vertex> origin_of;  // F vertex -> origin
    std::vector<std::int64_t> local(origins, -1);
    for (Vertex v = 0; v < origins; ++v) {
        const auto& clique = role == Colour::blue ? blue[v] : red[v];
        if (!clique) continue;
        local[v] = static_cast<std::int64_t>(origin_of.size());
        origin_of.push_back(v);
        family.clusters.push_back(clique->vertices);
    }
    trace.role_clusters = origin_of.size();

    ConnectorScope scope;
    for (Vertex a = 0; a < origin_of.size(); ++a) {
        for (Vertex b = a + 1; b < origin_of.size(); ++b) {
            if (!host.power.has_edge(origin_of[a], origin_of[b])) continue;
            scope.pairs.emplace_back(a, b);
            for (Vertex d = b + 1; d < origin_of.size(); ++d) {
                if (host.power.has_edge(origin_of[a], origin_of[d]) && host.power.has_edge(origin_of[b], origin_of[d])) {
                    scope.triples.push_back({a, b, d});
                    scope.triples.push_back({a, d, b});
                    scope.triples.push_back({b, d, a});
                }
            }
        }
    }
    const TwoThreeGraph f = build_auxiliary_f(h, c, family, scope);
    trace.f_two_edges = f.num_two_edges();
    trace.f_three_edges = f.num_three_edges();
    clock.lap("auxiliary");

    const std::size_t levels = params.k + 1;
    ObstructionOptions options;
    options.sizing = params.strict_constants ? ObstructionSizing::exact : ObstructionSizing::balanced;
    if (options.sizing == ObstructionSizing::exact) {
        unsigned __int128 need = static_cast<unsigned __int128>(params.c) * params.n;
        for (std::size_t i = 1; i < levels && need <= f.num_vertices(); ++i) need *= 5;
        if (need > f.num_vertices()) {
            return fail(out, FailureKind::obstruction_undersized,
                        std::to_string(f.num_vertices()) + " role clusters, fewer than 5^k*c*n");
        }
    }
    const ObstructionResult split = extract_obstruction_sets(f, levels, params.c, params.n, options);
    clock.lap("obstruction");

    if (const auto* f_path = std::get_if<TwoThreePath>(&split)) {
        trace.branch = "blue";
        trace.f_path = *f_path;
        TightPath3 path = blue_path_from_23path(*f_path, family, h, c);
        clock.lap("blue_path");
        finish(out, h, c, role, std::move(path), params.n);
        return out;
    }

    trace.branch = "red";
    const auto& sets = std::get<ObstructionSets>(split).sets;
    std::vector<Vertex> support;
    for (const auto& set : sets) {
        VertexSet mapped;
        for (Vertex v : set) mapped.push_back(origin_of[v]);
        support.insert(support.end(), mapped.begin(), mapped.end());
        trace.obstruction_sets.push_back(std::move(mapped));
    }
    for (std::size_t i = 0; i < trace.obstruction_sets.size(); ++i) {
        if (trace.obstruction_sets[i].empty()) {
            return fail(out, FailureKind::obstruction_undersized, "obstruction set " + std::to_string(i + 1) + " is empty");
        }
    }
    std::sort(support.begin(), support.end());
    const InducedSubgraph sub = induced_subgraph(host.g, support);
    std::vector<VertexSet> sub_sets;
    for (const auto& set : trace.obstruction_sets) {
        VertexSet s;
        for (Vertex v : set) {
            s.push_back(static_cast<Vertex>(std::lower_bound(support.begin(), support.end(), v) - support.begin()));
        }
        sub_sets.push_back(std::move(s));
    }
    if (params.require_p1) {
        CertifyOptions opts;
        opts.mode = CertificationMode::sampled;
        opts.trials = params.p1_trials;
        opts.seed = params.p1_seed;
        trace.p1 = certify_p1(sub.graph, params.eps, sub.graph.num_vertices(), opts);
        clock.lap("certify");
        if (!trace.p1->passed) {
            return fail(out, FailureKind::p1_certificate_absent,
                        std::to_string(trace.p1->violations.size()) + " sampled set pairs span no edge in G'");
        }
    }
    const auto alt = find_alternating_path(sub.graph, sub_sets, params.m(), params.alternating_budget);
    trace.alternating_expansions = alt.expansions;
    clock.lap("alternating_path");
    if (alt.status == AlternatingPathResult::Status::budget_exhausted) {
        return fail(out, FailureKind::alternating_path_budget,
                    "search budget of " + std::to_string(params.alternating_budget) + " nodes exhausted");
    }
    if (!alt.found()) {
        return fail(out, FailureKind::alternating_path_absent,
                    "no path of " + std::to_string(params.m()) + " vertices alternates through the sets");
    }
    std::vector<VertexSet> path_clusters;
    for (Vertex v : alt.path) {
        const Vertex origin = sub.to_parent[v];
        trace.alternating_path.push_back(origin);
        path_clusters.push_back(family.clusters[static_cast<std::size_t>(local[origin])]);
    }

    PrunedClusters pruned = power_path_and_prune(path_clusters, params.k, h, c, role);
    trace.deletions = pruned.audit;
    clock.lap("prune");
    for (std::size_t pos = 0; pos < pruned.clusters.size(); ++pos) {
        if (pruned.clusters[pos].size() >= 5) continue;
        const std::string detail = "cluster at path position " + std::to_string(pos) + " kept " +
                                   std::to_string(pruned.clusters[pos].size()) + " of 5 required vertices";
        if (params.strict_constants) throw HardFault("pruning underflow under strict constants: " + detail);
        return fail(out, FailureKind::pruning_underflow, detail);
    }

    Quadruple q = base_quadruple(pruned.clusters);
    trace.quadruple_steps.push_back(q.step);
    for (std::size_t i = 2; i + 1 <= params.n; ++i) {
        auto next = extend_quadruple(q, pruned.clusters, params.ell, h, c, role, params.strict_constants);
        if (auto* failure = std::get_if<ExtensionFailure>(&next)) {
            return fail(out, failure->hypothesis ? FailureKind::window_hypothesis : FailureKind::quadruple_extension,
                        "level " + std::to_string(i) + ": " + failure->detail);
        }
        q = std::move(std::get<Quadruple>(next));
        trace.quadruple_steps.push_back(q.step);
    }
    clock.lap("quadruples");
    finish(out, h, c, opposite(role), TightPath3{q.path_u}, params.n);
    return out;
}

}  // namespace tightpath
