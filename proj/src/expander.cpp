#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <unordered_set>

#include "tightpath/graph.hpp"

namespace tightpath {

namespace {

std::uint64_t pair_key(Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

// One Hamilton cycle avoiding `taken`, or empty when the repair budget runs out.
std::vector<Vertex> repaired_cycle(std::size_t n, const std::unordered_set<std::uint64_t>& taken, Rng& rng) {
    std::vector<Vertex> p(n);
    std::iota(p.begin(), p.end(), 0);
    shuffle(p, rng);
    auto collides = [&](std::size_t i) {
        return taken.count(pair_key(p[i], p[(i + 1) % n])) != 0;
    };
    std::size_t bad = 0;
    for (std::size_t i = 0; i < n; ++i) bad += collides(i);
    const std::size_t budget = 400 * n + 10'000;
    for (std::size_t step = 0; bad > 0 && step < budget; ++step) {
        std::size_t i = uniform_below(rng, n);
        for (std::size_t probe = 0; probe < n && !collides(i); ++probe) i = (i + 1) % n;
        std::size_t j = uniform_below(rng, n);
        std::size_t lo = std::min(i, j), hi = std::max(i, j);
        if (hi - lo < 2 || (lo == 0 && hi == n - 1)) continue;
        // 2-opt: edges (lo,lo+1), (hi,hi+1) become (lo,hi), (lo+1,hi+1).
        const Vertex a = p[lo], b = p[lo + 1], c = p[hi], d = p[(hi + 1) % n];
        const int removed = static_cast<int>(taken.count(pair_key(a, b)) + taken.count(pair_key(c, d)));
        const int added = static_cast<int>(taken.count(pair_key(a, c)) + taken.count(pair_key(b, d)));
        if (added > removed) continue;
        std::reverse(p.begin() + static_cast<std::ptrdiff_t>(lo + 1), p.begin() + static_cast<std::ptrdiff_t>(hi + 1));
        bad = bad - static_cast<std::size_t>(removed) + static_cast<std::size_t>(added);
    }
    if (bad > 0) p.clear();
    return p;
}

}  // namespace

Graph sample_expander(const ExpanderParams& params, std::size_t n) {
    if (params.b < 4 || params.b % 2 != 0) {
        throw std::invalid_argument("sample_expander: degree b must be even and at least 4");
    }
    if (params.a == 0) throw std::invalid_argument("sample_expander: a must be positive");
    const std::size_t num_vertices = params.a * n;
    if (num_vertices < params.b + 1) {
        throw std::invalid_argument("sample_expander: a*n = " + std::to_string(num_vertices) +
                                    " cannot host a " + std::to_string(params.b) + "-regular graph");
    }
    Rng rng(params.seed);
    constexpr int kRestarts = 64;
    for (int restart = 0; restart < kRestarts; ++restart) {
        std::unordered_set<std::uint64_t> taken;
        taken.reserve(num_vertices * params.b);
        std::vector<Edge> edges;
        bool ok = true;
        for (std::uint64_t cycle = 0; cycle < params.b / 2 && ok; ++cycle) {
            std::vector<Vertex> p = repaired_cycle(num_vertices, taken, rng);
            if (p.empty()) {
                ok = false;
                break;
            }
            for (std::size_t i = 0; i < num_vertices; ++i) {
                const Vertex u = p[i], v = p[(i + 1) % num_vertices];
                taken.insert(pair_key(u, v));
                edges.emplace_back(std::min(u, v), std::max(u, v));
            }
        }
        if (!ok) continue;
        Graph g = Graph::from_edges(num_vertices, edges);
        if (g.regular_degree() != params.b) throw HardFault("sample_expander produced an irregular graph");
        return g.with_degree_bound(params.b);
    }
    throw std::runtime_error("sample_expander: collision repair did not converge");
}

namespace {

void deflate(std::vector<double>& x) {
    const double mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
    for (double& v : x) v -= mean;
}

double norm(const std::vector<double>& x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return std::sqrt(s);
}

void multiply(const Graph& g, const std::vector<double>& x, std::vector<double>& y) {
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
        double s = 0.0;
        for (Vertex w : g.neighbours(u)) s += x[w];
        y[u] = s;
    }
}

VertexSet random_subset(std::vector<Vertex>& pool, std::size_t from, std::size_t size, Rng& rng) {
    // partial Fisher-Yates on pool[from..]
    for (std::size_t i = 0; i < size; ++i) {
        const std::size_t j = from + i + uniform_below(rng, pool.size() - from - i);
        std::swap(pool[from + i], pool[j]);
    }
    VertexSet out(pool.begin() + static_cast<std::ptrdiff_t>(from),
                  pool.begin() + static_cast<std::ptrdiff_t>(from + size));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

ExpansionCertificate certify_p1(const Graph& g, Rational eps, std::size_t n, const CertifyOptions& options) {
    if (eps.num() == 0 || !(eps < Rational(1, 1))) {
        throw std::invalid_argument("certify_p1: eps must lie strictly between 0 and 1");
    }
    const std::size_t num_vertices = g.num_vertices();
    ExpansionCertificate cert;
    cert.mode = options.mode;
    cert.set_size = eps.ceil_times(n);
    if (cert.set_size == 0) cert.set_size = 1;

    if (options.mode == CertificationMode::spectral) {
        const auto d = g.regular_degree();
        if (!d) throw std::invalid_argument("certify_p1: spectral mode needs a regular graph");
        cert.degree = *d;
        if (num_vertices < 2) throw std::invalid_argument("certify_p1: graph too small");
        // Power iteration on A^2 restricted to the complement of the all-ones
        // eigenvector yields the largest remaining |lambda|.
        Rng rng(options.seed);
        std::vector<double> x(num_vertices), y(num_vertices), z(num_vertices);
        for (double& v : x) v = uniform_unit(rng) - 0.5;
        deflate(x);
        double nx = norm(x);
        if (nx == 0.0) throw HardFault("certify_p1: degenerate start vector");
        for (double& v : x) v /= nx;
        double mu = 0.0;
        double residual = 0.0;
        std::size_t it = 0;
        for (; it < options.max_iterations; ++it) {
            multiply(g, x, y);
            multiply(g, y, z);
            deflate(z);
            double rayleigh = 0.0;
            for (std::size_t i = 0; i < num_vertices; ++i) rayleigh += x[i] * z[i];
            residual = 0.0;
            for (std::size_t i = 0; i < num_vertices; ++i) {
                const double r = z[i] - rayleigh * x[i];
                residual += r * r;
            }
            residual = std::sqrt(residual);
            const double nz = norm(z);
            const double previous = mu;
            mu = rayleigh;
            if (nz == 0.0) break;
            for (std::size_t i = 0; i < num_vertices; ++i) x[i] = z[i] / nz;
            if (it > 10 && std::abs(mu - previous) <= options.tolerance * std::max(1.0, mu)) break;
        }
        cert.iterations = it;
        cert.lambda_bound = std::sqrt(std::max(0.0, mu + residual));
        cert.threshold = static_cast<double>(cert.degree) * static_cast<double>(cert.set_size) /
                         static_cast<double>(num_vertices);
        cert.passed = cert.threshold > cert.lambda_bound;
        return cert;
    }

    if (2 * cert.set_size > num_vertices) {
        throw std::invalid_argument("certify_p1: two disjoint sets of size " + std::to_string(cert.set_size) +
                                    " do not fit");
    }
    Rng rng(options.seed);
    std::vector<Vertex> pool(num_vertices);
    std::iota(pool.begin(), pool.end(), 0);
    cert.trials = options.trials;
    for (std::size_t trial = 0; trial < options.trials; ++trial) {
        VertexSet s = random_subset(pool, 0, cert.set_size, rng);
        VertexSet t = random_subset(pool, cert.set_size, cert.set_size, rng);
        if (edge_count_between(g, s, t) == 0) cert.violations.push_back({std::move(s), std::move(t)});
    }
    cert.passed = cert.violations.empty();
    return cert;
}

}  // namespace tightpath
