#include "tightpath/report.hpp"

namespace tightpath {

using nlohmann::json;

json params_to_json(const PipelineParams& p) {
    return {
        {"ell", p.ell},
        {"k", p.k},
        {"eps", p.eps.to_string()},
        {"t", p.t},
        {"t_prime", p.t_prime},
        {"c", p.c},
        {"a", p.a},
        {"n", p.n},
        {"strict_constants", p.strict_constants},
        {"tie_break", colour_name(p.tie_break)},
        {"require_p1", p.require_p1},
        {"p1_trials", p.p1_trials},
        {"p1_seed", p.p1_seed},
        {"alternating_budget", p.alternating_budget},
    };
}

namespace {

std::uint64_t get_count(const json& j, const char* key, std::uint64_t fallback) {
    if (!j.contains(key)) return fallback;
    const auto& v = j.at(key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
        throw ConfigError(std::string("params.") + key + ": expected a non-negative integer");
    }
    return v.get<std::uint64_t>();
}

bool get_flag(const json& j, const char* key, bool fallback) {
    if (!j.contains(key)) return fallback;
    if (!j.at(key).is_boolean()) throw ConfigError(std::string("params.") + key + ": expected true or false");
    return j.at(key).get<bool>();
}

}  // namespace

PipelineParams params_from_json(const json& j) {
    if (!j.is_object()) throw ConfigError("params: expected an object");
    static const char* known[] = {"ell", "k", "eps", "t", "t_prime", "c", "a", "n", "strict_constants", "tie_break",
                                  "require_p1", "p1_trials", "p1_seed", "alternating_budget"};
    for (const auto& [key, _] : j.items()) {
        if (std::find(std::begin(known), std::end(known), key) == std::end(known)) {
            throw ConfigError("params." + key + ": unknown field");
        }
    }
    PipelineParams p;
    p.ell = get_count(j, "ell", p.ell);
    p.k = get_count(j, "k", p.k);
    p.t = get_count(j, "t", p.t);
    p.t_prime = get_count(j, "t_prime", p.t_prime);
    p.c = get_count(j, "c", p.c);
    p.a = get_count(j, "a", p.a);
    p.n = get_count(j, "n", p.n);
    p.p1_trials = get_count(j, "p1_trials", p.p1_trials);
    p.p1_seed = get_count(j, "p1_seed", p.p1_seed);
    p.alternating_budget = get_count(j, "alternating_budget", p.alternating_budget);
    p.strict_constants = get_flag(j, "strict_constants", p.strict_constants);
    p.require_p1 = get_flag(j, "require_p1", p.require_p1);
    if (j.contains("eps")) {
        try {
            const auto& e = j.at("eps");
            p.eps = Rational::parse(e.is_string() ? e.get<std::string>() : e.dump());
        } catch (const std::exception& e) {
            throw ConfigError(std::string("params.eps: ") + e.what());
        }
    }
    if (j.contains("tie_break")) {
        try {
            p.tie_break = parse_colour(j.at("tie_break").get<std::string>());
        } catch (const std::exception& e) {
            throw ConfigError(std::string("params.tie_break: ") + e.what());
        }
    }
    return p;
}

json certificate_to_json(const ExpansionCertificate& cert) {
    json j{{"mode", cert.mode == CertificationMode::spectral ? "spectral" : "sampled"},
           {"passed", cert.passed},
           {"set_size", cert.set_size}};
    if (cert.mode == CertificationMode::spectral) {
        j["degree"] = cert.degree;
        j["lambda_bound"] = cert.lambda_bound;
        j["threshold"] = cert.threshold;
        j["iterations"] = cert.iterations;
    } else {
        j["trials"] = cert.trials;
        json violations = json::array();
        for (const auto& v : cert.violations) violations.push_back({{"s", v.s}, {"t", v.t}});
        j["violations"] = std::move(violations);
    }
    return j;
}

json connector_to_json(const Connector& conn) {
    json parts = json::array();
    for (const auto& g : conn.parts) {
        json part{{"x", {g.x1, g.x2}}, {"y", {g.y1, g.y2}}};
        if (g.z) part["z"] = *g.z;
        parts.push_back(std::move(part));
    }
    return {{"kind", connector_kind_name(conn.kind)}, {"parts", std::move(parts)}};
}

json outcome_to_json(const PipelineOutcome& o) {
    const auto& tr = o.trace;
    json j;
    j["success"] = o.success();
    j["colour"] = o.colour ? json(colour_name(*o.colour)) : json(nullptr);
    j["path"] = o.path.vertices;
    j["path_length"] = o.path.size();
    j["verdict"] = {{"ok", o.verdict.ok}, {"reason", o.verdict.reason}};
    j["failure"] = o.failure ? json{{"kind", failure_kind_name(o.failure->kind)}, {"detail", o.failure->detail}}
                             : json(nullptr);
    json trace;
    trace["role"] = tr.role ? json(colour_name(*tr.role)) : json(nullptr);
    trace["clusters"] = {{"blue", tr.blue_clusters}, {"red", tr.red_clusters}, {"role", tr.role_clusters}};
    trace["f"] = {{"two_edges", tr.f_two_edges}, {"three_edges", tr.f_three_edges}};
    trace["branch"] = tr.branch.empty() ? json(nullptr) : json(tr.branch);
    if (tr.f_path) {
        json w = json::array();
        for (const auto& x : tr.f_path->witnesses) w.push_back(x ? json(*x) : json(nullptr));
        trace["f_path"] = {{"vertices", tr.f_path->vertices}, {"witnesses", std::move(w)}};
    }
    trace["obstruction_sets"] = tr.obstruction_sets;
    if (tr.p1) trace["p1"] = certificate_to_json(*tr.p1);
    trace["alternating_path"] = tr.alternating_path;
    trace["alternating_expansions"] = tr.alternating_expansions;
    json deletions = json::array();
    for (const auto& d : tr.deletions) {
        deletions.push_back({{"positions", d.positions}, {"connector", connector_to_json(d.connector)}});
    }
    trace["deletions"] = std::move(deletions);
    trace["quadruple_steps"] = tr.quadruple_steps;
    j["trace"] = std::move(trace);
    json timings = json::object();
    for (const auto& [stage, ms] : tr.timings_ms) timings[stage] = ms;
    j["timings"] = std::move(timings);
    return j;
}

}  // namespace tightpath
