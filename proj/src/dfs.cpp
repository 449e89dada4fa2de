#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "tightpath/two_three.hpp"

namespace tightpath {

namespace {

constexpr std::uint32_t kNoSet = std::numeric_limits<std::uint32_t>::max();

std::vector<std::size_t> ranks_of(const std::vector<Vertex>& ordering, std::size_t n) {
    std::vector<std::size_t> rank(n, std::numeric_limits<std::size_t>::max());
    if (ordering.empty()) {
        std::iota(rank.begin(), rank.end(), std::size_t{0});
        return rank;
    }
    if (ordering.size() != n) throw std::invalid_argument("vertex ordering must list every vertex once");
    for (std::size_t i = 0; i < n; ++i) {
        if (ordering[i] >= n || rank[ordering[i]] != std::numeric_limits<std::size_t>::max()) {
            throw std::invalid_argument("vertex ordering must list every vertex once");
        }
        rank[ordering[i]] = i;
    }
    return rank;
}

}  // namespace

std::size_t DfsState::w_u_size() const noexcept {
    std::size_t count = 0;
    for (const auto& w : u.witnesses) count += w.has_value();
    return count;
}

VertexSet DfsState::t(std::size_t i) const {
    VertexSet out;
    for (Vertex v = 0; v < slot.size(); ++v) {
        if (in_t(v, i)) out.push_back(v);
    }
    return out;
}

VertexSet DfsState::w_u() const {
    VertexSet out;
    for (const auto& w : u.witnesses) {
        if (w) out.push_back(*w);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string dfs_trace_line(const DfsState& state) {
    std::ostringstream line;
    line << state.s.size() << ' ' << state.w_s.size() << ' ' << state.m() << ' ' << state.w_u_size();
    for (std::size_t size : state.t_size) line << ' ' << size;
    return line.str();
}

std::optional<std::string> check_dfs_invariants(const TwoThreeGraph& f, std::span<const VertexSet> v_sets,
                                                const DfsState& state) {
    const std::size_t k = v_sets.size();
    const Partition partition(v_sets, f.num_vertices());
    if (auto verdict = validate_23_path(f, state.u); !verdict) return "U is not a (2,3)-path: " + verdict.reason;
    VertexSet marked_wu;
    for (Vertex v = 0; v < state.slot.size(); ++v) {
        if (state.slot[v] == DfsState::Slot::path_witness) marked_wu.push_back(v);
    }
    if (marked_wu != state.w_u()) return std::string("W_U differs from the witnesses of U");
    for (Vertex v : state.s) {
        if (partition.part_of(v) != k - 1) return "S contains " + std::to_string(v) + " outside V_k";
    }
    for (Vertex v : state.u.vertices) {
        if (partition.part_of(v) != k - 1) return "U contains " + std::to_string(v) + " outside V_k";
    }
    for (Vertex w : marked_wu) {
        if (!partition.part_of(w)) return "W_U contains " + std::to_string(w) + " outside V_1..V_k";
    }
    std::vector<std::size_t> sizes(k, 0);
    for (Vertex v = 0; v < state.slot.size(); ++v) {
        if (state.slot[v] != DfsState::Slot::pending) continue;
        const auto part = partition.part_of(v);
        if (!part || *part != state.set_index[v]) return "T_i holds " + std::to_string(v) + " outside V_i";
        ++sizes[*part];
    }
    if (sizes != state.t_size) return std::string("T_i sizes are out of sync");
    if (state.w_s.size() > state.s.size()) return std::string("|W_S| > |S|");
    const std::size_t m = state.m();
    if (marked_wu.size() > (m == 0 ? 0 : m - 1)) return std::string("|W_U| > max(0, m - 1)");
    return std::nullopt;
}

DfsResult dfs_traverse(const TwoThreeGraph& f, std::span<const VertexSet> v_sets, const DfsOptions& options,
                       const DfsObserver& observer) {
    const std::size_t n = f.num_vertices();
    const std::size_t k = v_sets.size();
    if (k == 0) throw std::invalid_argument("dfs_traverse: need at least one vertex set");
    const auto rank = ranks_of(options.ordering, n);
    std::vector<Vertex> by_rank(n);
    for (Vertex v = 0; v < n; ++v) by_rank[rank[v]] = v;

    DfsResult result;
    DfsState& st = result.state;
    st.slot.assign(n, DfsState::Slot::outside);
    st.set_index.assign(n, kNoSet);
    st.t_size.assign(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        for (Vertex v : v_sets[i]) {
            if (v >= n) throw std::invalid_argument("dfs_traverse: vertex out of range");
            if (st.set_index[v] != kNoSet) throw std::invalid_argument("dfs_traverse: vertex sets overlap");
            st.set_index[v] = static_cast<std::uint32_t>(i);
            st.slot[v] = DfsState::Slot::pending;
            ++st.t_size[i];
        }
    }
    const auto last = static_cast<std::uint32_t>(k - 1);
    auto take = [&](Vertex v, DfsState::Slot to) {
        --st.t_size[st.set_index[v]];
        st.slot[v] = to;
    };
    const std::size_t vk_size = st.t_size[last];
    std::size_t start_cursor = 0;  // T_k only shrinks, so the scan for its least vertex never backs up

    while (st.t_size[last] > 0) {
        const std::size_t m = st.m();
        if (m == 0) {
            while (!st.in_t(by_rank[start_cursor], last)) ++start_cursor;
            const Vertex v = by_rank[start_cursor];
            take(v, DfsState::Slot::path);
            st.u.vertices.push_back(v);
        } else {
            const Vertex tail = st.u.vertices.back();
            std::optional<Vertex> best;
            for (Vertex v : f.partners(tail)) {
                if (!st.in_t(v, last)) continue;
                if (best && rank[v] >= rank[*best]) continue;
                bool reachable = f.has_two_edge(tail, v);
                for (std::size_t i = 0; !reachable && i < f.witnesses(tail, v).size(); ++i) {
                    reachable = st.in_t(f.witnesses(tail, v)[i]);
                }
                if (reachable) best = v;
            }
            if (best) {
                const Vertex v = *best;
                take(v, DfsState::Slot::path);
                std::optional<Vertex> witness;
                if (!f.has_two_edge(tail, v)) {
                    for (Vertex w : f.witnesses(tail, v)) {
                        if (st.in_t(w) && (!witness || rank[w] < rank[*witness])) witness = w;
                    }
                    if (!witness) throw HardFault("dfs_traverse: extension lost its witness");
                    take(*witness, DfsState::Slot::path_witness);
                }
                st.u.vertices.push_back(v);
                st.u.witnesses.push_back(witness);
            } else {
                st.slot[tail] = DfsState::Slot::done;
                st.s.push_back(tail);
                st.u.vertices.pop_back();
                if (m > 1) {
                    if (const auto w = st.u.witnesses.back()) {
                        st.slot[*w] = DfsState::Slot::done_witness;
                        st.w_s.push_back(*w);
                    }
                    st.u.witnesses.pop_back();
                }
            }
        }
        ++result.iterations;
        if (result.iterations > 2 * vk_size) {
            // Each iteration moves a V_k vertex T_k -> U or U -> S.
            throw HardFault("dfs_traverse: iteration count exceeds 2|V_k|");
        }
        if (options.check_invariants) {
            if (auto broken = check_dfs_invariants(f, v_sets, st)) {
                throw HardFault("dfs_traverse: invariant violated: " + *broken);
            }
        }
        if (observer && observer(st, result.iterations) == DfsControl::stop) {
            result.stopped_by_observer = true;
            break;
        }
    }
    return result;
}

std::optional<std::string> check_obstruction_sets(const TwoThreeGraph& f, std::span<const VertexSet> sets) {
    const Partition partition(sets, f.num_vertices());
    for (const auto& e : f.two_edges()) {
        if (is_transversal(e, partition)) {
            return "2-edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " is transversal";
        }
    }
    const std::size_t last = sets.size() - 1;
    for (const auto& e : f.three_edges()) {
        const std::string name = std::to_string(e.u) + " " + std::to_string(e.v) + "(" + std::to_string(e.w) + ")";
        if (is_transversal(e, partition)) return "3-edge " + name + " is transversal";
        const auto pu = partition.part_of(e.u), pv = partition.part_of(e.v), pw = partition.part_of(e.w);
        if (pw != last) continue;
        if ((pu && *pu < last && pv == last) || (pv && *pv < last && pu == last)) {
            return "3-edge " + name + " joins V_1..V_k-1 to a pair inside V_k";
        }
    }
    return std::nullopt;
}

namespace {

struct Extractor {
    const TwoThreeGraph& f;
    std::size_t levels;
    std::size_t n;
    const ObstructionOptions& options;
    std::vector<std::size_t> rank;

    void trim(VertexSet& set, std::size_t size) const {
        std::sort(set.begin(), set.end(), [&](Vertex a, Vertex b) { return rank[a] < rank[b]; });
        set.resize(std::min(set.size(), size));
        std::sort(set.begin(), set.end());
    }

    static std::vector<VertexSet> sets_of(const DfsState& st) {
        std::vector<VertexSet> out;
        const std::size_t k = st.k();
        for (std::size_t i = 0; i + 1 < k; ++i) out.push_back(st.t(i));
        VertexSet s = st.s;
        std::sort(s.begin(), s.end());
        out.push_back(std::move(s));
        out.push_back(st.t(k - 1));
        return out;
    }

    // Level j returns a path or j sets; `c` is the size multiplier at this level.
    ObstructionResult level(std::size_t j, std::size_t c) const {
        if (j == 1) {
            VertexSet all(f.num_vertices());
            std::iota(all.begin(), all.end(), Vertex{0});
            return ObstructionSets{{std::move(all)}};
        }
        if (c > std::numeric_limits<std::size_t>::max() / 5) throw std::overflow_error("size multiplier overflow");
        ObstructionResult below = level(j - 1, 5 * c);
        if (std::holds_alternative<TwoThreePath>(below)) return below;
        const auto& sets = std::get<ObstructionSets>(below).sets;

        const bool exact = options.sizing == ObstructionSizing::exact;
        const std::size_t vk = sets.back().size();
        const std::size_t target =
            exact ? c * n : std::max<std::size_t>(1, vk / (levels - j + 2));

        std::optional<TwoThreePath> path;
        std::optional<std::vector<VertexSet>> chosen;
        std::size_t best_balance = 0;
        std::vector<VertexSet> best_sets;
        DfsOptions dfs_options{options.ordering, true};
        dfs_traverse(f, sets, dfs_options, [&](const DfsState& st, std::size_t) {
            if (st.m() >= n) {
                path = st.u;
                return DfsControl::stop;
            }
            if (st.s.size() >= target) {
                chosen = sets_of(st);
                return DfsControl::stop;
            }
            const std::size_t balance = std::min(st.s.size(), st.t_size.back());
            if (!exact && balance > best_balance) {
                best_balance = balance;
                best_sets = sets_of(st);
            }
            return DfsControl::proceed;
        });

        if (path) {
            if (auto verdict = validate_23_path(f, *path); !verdict) {
                throw HardFault("extract_obstruction_sets: DFS path invalid: " + verdict.reason);
            }
            return std::move(*path);
        }
        if (!chosen) {
            if (exact) throw HardFault("extract_obstruction_sets: |S| never reached cn");
            chosen = best_sets.empty() ? std::vector<VertexSet>(j) : std::move(best_sets);
        }
        if (exact) {
            for (auto& set : *chosen) {
                if (set.size() < c * n) throw HardFault("extract_obstruction_sets: a set fell below cn");
                trim(set, c * n);
            }
        }
        if (auto broken = check_obstruction_sets(f, *chosen)) {
            throw HardFault("extract_obstruction_sets: post-condition failed: " + *broken);
        }
        return ObstructionSets{std::move(*chosen)};
    }
};

}  // namespace

ObstructionResult extract_obstruction_sets(const TwoThreeGraph& f, std::size_t k, std::size_t c, std::size_t n,
                                           const ObstructionOptions& options) {
    if (k == 0 || c == 0 || n == 0) throw std::invalid_argument("extract_obstruction_sets: k, c, n must be positive");
    if (options.sizing == ObstructionSizing::exact) {
        unsigned __int128 need = static_cast<unsigned __int128>(c) * n;
        for (std::size_t i = 1; i < k; ++i) need *= 5;
        if (need > f.num_vertices()) {
            throw std::invalid_argument("extract_obstruction_sets: need at least 5^(k-1)*c*n vertices");
        }
    }
    Extractor extractor{f, k, n, options, ranks_of(options.ordering, f.num_vertices())};
    return extractor.level(k, c);
}

}  // namespace tightpath
