#include <algorithm>

#include "tightpath/graph.hpp"

namespace tightpath {

AlternatingPathResult find_alternating_path(const Graph& g, std::span<const VertexSet> sets, std::size_t m,
                                            std::uint64_t budget) {
    if (m == 0) throw std::invalid_argument("find_alternating_path: m must be positive");
    if (sets.empty()) throw std::invalid_argument("find_alternating_path: no vertex sets");
    const std::size_t classes = sets.size();
    std::vector<std::int64_t> class_of(g.num_vertices(), -1);
    for (std::size_t j = 0; j < classes; ++j) {
        if (sets[j].empty()) throw std::invalid_argument("find_alternating_path: empty vertex set");
        for (Vertex v : sets[j]) {
            if (v >= g.num_vertices()) throw std::invalid_argument("find_alternating_path: vertex out of range");
            if (class_of[v] != -1) throw std::invalid_argument("find_alternating_path: sets overlap");
            class_of[v] = static_cast<std::int64_t>(j);
        }
    }

    AlternatingPathResult result;
    std::vector<std::uint8_t> used(g.num_vertices(), 0);
    std::vector<Vertex> path;
    std::vector<std::size_t> cursor;  // next neighbour index to try, per depth
    VertexSet starts = sets[0];
    std::sort(starts.begin(), starts.end());

    for (Vertex start : starts) {
        path.assign(1, start);
        cursor.assign(1, 0);
        used[start] = 1;
        if (++result.expansions > budget) {
            result.status = AlternatingPathResult::Status::budget_exhausted;
            return result;
        }
        while (!path.empty()) {
            if (path.size() == m) {
                result.status = AlternatingPathResult::Status::found;
                result.path = path;
                return result;
            }
            const Vertex tail = path.back();
            const auto want = static_cast<std::int64_t>(path.size() % classes);
            const auto nbrs = g.neighbours(tail);
            std::size_t& idx = cursor.back();
            while (idx < nbrs.size() && (used[nbrs[idx]] || class_of[nbrs[idx]] != want)) ++idx;
            if (idx == nbrs.size()) {
                used[tail] = 0;
                path.pop_back();
                cursor.pop_back();
                continue;
            }
            const Vertex next = nbrs[idx++];
            if (++result.expansions > budget) {
                result.status = AlternatingPathResult::Status::budget_exhausted;
                return result;
            }
            used[next] = 1;
            path.push_back(next);
            cursor.push_back(0);
        }
    }
    result.status = AlternatingPathResult::Status::exhausted;
    return result;
}

}  // namespace tightpath
