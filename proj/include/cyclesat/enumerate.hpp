#pragma once

// Non-isomorphic graph generation by canonical edge augmentation, walking up
// from the empty graph one edge at a time. Two gates keep every unlabeled
// graph to exactly one appearance:
//   * children of a node are built from one non-edge per Aut(parent) orbit;
//   * a child survives only if the augmenting edge lies in the Aut(child)
//     orbit of the child's canonical edge (the one deleted to reach the
//     child's unique parent).
// No dedup table is kept; memory stays flat along the recursion.

#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cyclesat/canonical.hpp"
#include "cyclesat/graph.hpp"

namespace cyclesat {

/// A node of the augmentation tree: the graph plus its automorphism
/// generators (reused for child orbit computations).
struct AugmentNode {
    Graph g;
    std::vector<std::vector<int>> generators;
};

inline AugmentNode augment_root(int n) {
    Graph empty(n);
    auto cf = canonical_form(empty);
    return {std::move(empty), std::move(cf.generators)};
}

/// Controls for walk_graphs. `prune` cuts a subtree at any accepted child for
/// which it returns true; it must be isomorphism-invariant to keep the
/// exactly-once guarantee meaningful. `stop` aborts the walk (checked per
/// node). `visit` sees one representative per class at `target_m` edges and
/// returns false to end the walk early.
struct WalkHooks {
    std::function<bool(const Graph&)> prune;
    std::function<bool()> stop;
    std::function<bool(const Graph&)> visit;
};

namespace detail {

// Returns false when the walk was cut short by visit or stop.
inline bool augment_dfs(const AugmentNode& node, int m, int target_m, const WalkHooks& hooks) {
    if (hooks.stop && hooks.stop()) return false;
    if (m == target_m) return hooks.visit ? hooks.visit(node.g) : true;
    const int n = node.g.vertex_count();
    for (auto [u, v] : nonedge_orbit_reps(node.g, node.generators)) {
        Graph child = node.g.with_edge(u, v);
        if (hooks.prune && hooks.prune(child)) continue;
        auto cf = canonical_form(child);
        if (!same_pair_orbit(n, cf.generators, {u, v}, canonical_edge(child, cf))) continue;
        AugmentNode next{std::move(child), std::move(cf.generators)};
        if (!augment_dfs(next, m + 1, target_m, hooks)) return false;
    }
    return true;
}

}  // namespace detail

/// Visit one representative of every isomorphism class of n-vertex graphs
/// with exactly target_m edges (disconnected classes included). Returns false
/// if the walk was stopped early.
inline bool walk_graphs(int n, int target_m, const WalkHooks& hooks) {
    if (n < 1) throw std::invalid_argument("walk_graphs: n must be >= 1");
    long max_m = static_cast<long>(n) * (n - 1) / 2;
    if (target_m < 0 || target_m > max_m)
        throw std::invalid_argument("walk_graphs: edge count out of range");
    return detail::augment_dfs(augment_root(n), 0, target_m, hooks);
}

/// Continue a walk from a previously collected node (used to split work
/// across threads; the node must carry its own generators).
inline bool walk_graphs_from(const AugmentNode& node, int m, int target_m,
                             const WalkHooks& hooks) {
    return detail::augment_dfs(node, m, target_m, hooks);
}

/// One representative per isomorphism class of connected n-vertex graphs
/// with exactly m edges, in a fixed deterministic order.
inline std::vector<Graph> enumerate_connected(int n, int m) {
    if (n < 1) throw std::invalid_argument("enumerate_connected: n must be >= 1");
    long max_m = static_cast<long>(n) * (n - 1) / 2;
    if (m < n - 1)
        throw std::invalid_argument("enumerate_connected: m below spanning-tree threshold");
    if (m > max_m)
        throw std::invalid_argument("enumerate_connected: m exceeds the complete graph");
    std::vector<Graph> out;
    WalkHooks hooks;
    hooks.visit = [&](const Graph& g) {
        if (g.is_connected()) out.push_back(g);
        return true;
    };
    walk_graphs(n, m, hooks);
    return out;
}

}  // namespace cyclesat
