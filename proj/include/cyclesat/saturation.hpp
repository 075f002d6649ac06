#pragma once

// Saturation checking: exact-length simple paths and cycles, family freeness,
// and the saturated/contains-forbidden/not-maximal verdict with witnesses.

#include <array>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cyclesat/family.hpp"
#include "cyclesat/graph.hpp"

namespace cyclesat {

struct CycleWitness {
    int length = 0;
    std::vector<int> vertices;  // cycle order; closing edge last->first implied
};

namespace detail {

// BFS hop counts toward target; kMaxVertices+1 where unreachable.
inline std::vector<int> hops_to(const Graph& g, int target) {
    std::vector<int> dist(g.vertex_count(), kMaxVertices + 1);
    dist[target] = 0;
    std::vector<int> queue{target};
    for (std::size_t h = 0; h < queue.size(); ++h) {
        int v = queue[h];
        g.for_each_neighbor(v, [&](int w) {
            if (dist[w] > dist[v] + 1) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        });
    }
    return dist;
}

inline bool path_dfs(const Graph& g, int cur, int target, int remaining, VertexSet& used,
                     const std::vector<int>& dist, std::vector<int>& path) {
    if (remaining == 1) {
        if (g.has_edge(cur, target) && !used.contains(target)) {
            path.push_back(target);
            return true;
        }
        return false;
    }
    bool found = false;
    g.for_each_neighbor(cur, [&](int w) {
        if (found || used.contains(w) || w == target) return;
        if (dist[w] > remaining - 1) return;
        used.insert(w);
        path.push_back(w);
        if (path_dfs(g, w, target, remaining - 1, used, dist, path)) {
            found = true;
            return;
        }
        path.pop_back();
        used.erase(w);
    });
    return found;
}

}  // namespace detail

/// Simple path from u to v with exactly k edges; witness is the vertex
/// sequence u..v when one exists.
inline std::optional<std::vector<int>> exists_path_of_length(const Graph& g, int u, int v,
                                                             int k) {
    if (u == v) throw std::invalid_argument("path endpoints coincide");
    if (k < 1) throw std::invalid_argument("path length must be at least 1");
    if (k == 1) {
        if (g.has_edge(u, v)) return std::vector<int>{u, v};
        return std::nullopt;
    }
    auto dist = detail::hops_to(g, v);
    if (dist[u] > k) return std::nullopt;
    VertexSet used;
    used.insert(u);
    std::vector<int> path{u};
    if (detail::path_dfs(g, u, v, k, used, dist, path)) return path;
    return std::nullopt;
}

namespace detail {

inline bool cycle_dfs(const Graph& g, int anchor, int cur, int remaining, VertexSet& used,
                      const std::vector<int>& dist, std::vector<int>& path) {
    if (remaining == 0) return g.has_edge(cur, anchor);
    bool found = false;
    g.for_each_neighbor(cur, [&](int w) {
        if (found || used.contains(w) || dist[w] > remaining) return;
        used.insert(w);
        path.push_back(w);
        if (cycle_dfs(g, anchor, w, remaining - 1, used, dist, path)) {
            found = true;
            return;
        }
        path.pop_back();
        used.erase(w);
    });
    return found;
}

}  // namespace detail

/// Simple cycle on exactly l vertices; witness lists the cycle in order
/// starting from its smallest vertex.
inline std::optional<std::vector<int>> has_cycle_of_length(const Graph& g, int l) {
    if (l < 3) throw std::invalid_argument("cycle length must be at least 3");
    const int n = g.vertex_count();
    if (l > n) return std::nullopt;
    for (int s = 0; s + l <= n; ++s) {
        // Anchor s is the smallest vertex on the cycle; all others exceed it.
        VertexSet used;
        for (int v = 0; v <= s; ++v) used.insert(v);
        auto dist = detail::hops_to(g, s);
        std::vector<int> path{s};
        if (detail::cycle_dfs(g, s, s, l - 1, used, dist, path)) return path;
    }
    return std::nullopt;
}

/// First forbidden cycle, trying smaller lengths first; nullopt means free.
inline std::optional<CycleWitness> find_forbidden_cycle(const Graph& g,
                                                        const CycleFamily& family) {
    for (int l : family.truncate(g.vertex_count()))
        if (auto cyc = has_cycle_of_length(g, l)) return CycleWitness{l, *cyc};
    return std::nullopt;
}

inline bool is_family_free(const Graph& g, const CycleFamily& family) {
    return !find_forbidden_cycle(g, family).has_value();
}

/// Smallest forbidden cycle through the absent edge uv, i.e. the smallest
/// l in the truncated family with a u-v path of l-1 edges.
inline std::optional<CycleWitness> creates_forbidden_cycle(const Graph& g, int u, int v,
                                                           const CycleFamily& family) {
    if (g.has_edge(u, v))
        throw std::invalid_argument("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                    " already present");
    for (int l : family.truncate(g.vertex_count()))
        if (auto path = exists_path_of_length(g, u, v, l - 1)) return CycleWitness{l, *path};
    return std::nullopt;
}

struct SaturationVerdict {
    enum class Status { saturated, contains_forbidden, not_maximal };
    Status status = Status::saturated;
    std::optional<CycleWitness> forbidden;          // contains_forbidden
    std::optional<std::pair<int, int>> missing_edge;  // not_maximal
    long probes = 0;                                 // non-edges examined

    bool saturated() const { return status == Status::saturated; }
};

/// Full verdict: free of forbidden cycles and every absent edge creates one.
/// Non-edges are scanned in lexicographic order, so the counter-witness is
/// deterministic.
inline SaturationVerdict check_saturated(const Graph& g, const CycleFamily& family) {
    SaturationVerdict verdict;
    if (auto cyc = find_forbidden_cycle(g, family)) {
        verdict.status = SaturationVerdict::Status::contains_forbidden;
        verdict.forbidden = std::move(cyc);
        return verdict;
    }
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v)) continue;
            ++verdict.probes;
            if (!creates_forbidden_cycle(g, u, v, family)) {
                verdict.status = SaturationVerdict::Status::not_maximal;
                verdict.missing_edge = {u, v};
                return verdict;
            }
        }
    verdict.status = SaturationVerdict::Status::saturated;
    return verdict;
}

}  // namespace cyclesat
