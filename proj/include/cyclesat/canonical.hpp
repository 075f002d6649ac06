#pragma once

// Canonical labeling via iterated neighbor-color refinement plus backtracking
// over cell orderings. The canonical labeling is the one whose column-order
// adjacency bitstring is lexicographically least among the explored cell
// orderings; ties between backtrack leaves yield automorphism generators.
//
// Degree-0 vertices are split off and assigned the leading positions (an
// exchange argument shows the least encoding always parks them first), so the
// backtracker never wades through their factorial orderings.
//
// Adequate for the n <= 12 graphs this project enumerates; the contract is
// isomorphism invariance, not speed.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "cyclesat/graph.hpp"
#include "cyclesat/graph6.hpp"

namespace cyclesat {

struct CanonicalForm {
    std::string g6;        // graph6 of the canonically relabeled graph
    std::vector<int> perm; // perm[v] = position of v under the canonical labeling
    std::vector<std::vector<int>> generators; // automorphism generators, original labels
};

namespace detail {

inline Graph apply_permutation(const Graph& g, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(g.edge_count()));
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return Graph::from_edges(g.vertex_count(), edges);
}

class Canonicalizer {
  public:
    explicit Canonicalizer(const Graph& g)
        : g_(g), n_(g.vertex_count()), color_(n_, 0), orbit_(n_) {
        std::iota(orbit_.begin(), orbit_.end(), 0);
    }

    void run() {
        std::vector<std::vector<int>> cells(1);
        cells[0].resize(n_);
        std::iota(cells[0].begin(), cells[0].end(), 0);
        refine(cells);
        descend(cells, 0);
    }

    std::vector<int> take_perm() { return std::move(best_perm_); }
    std::vector<std::vector<int>> take_generators() { return std::move(generators_); }

  private:
    using Cells = std::vector<std::vector<int>>;

    int find(int v) {
        while (orbit_[v] != v) v = orbit_[v] = orbit_[orbit_[v]];
        return v;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) orbit_[std::max(a, b)] = std::min(a, b);
    }

    // Split cells by neighbor color counts until stable. Subcell order is a
    // function of (cell position, count vector) only, never of vertex ids.
    void refine(Cells& cells) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i < cells.size(); ++i)
                for (int v : cells[i]) color_[v] = static_cast<int>(i);
            Cells next;
            next.reserve(cells.size());
            for (auto& cell : cells) {
                if (cell.size() == 1) {
                    next.push_back(std::move(cell));
                    continue;
                }
                std::vector<std::pair<std::vector<int>, int>> keyed;
                keyed.reserve(cell.size());
                for (int v : cell) {
                    std::vector<int> cnt(cells.size(), 0);
                    g_.for_each_neighbor(v, [&](int w) { ++cnt[color_[w]]; });
                    keyed.emplace_back(std::move(cnt), v);
                }
                std::stable_sort(keyed.begin(), keyed.end(),
                                 [](const auto& a, const auto& b) { return a.first < b.first; });
                std::size_t i = 0;
                while (i < keyed.size()) {
                    std::size_t j = i;
                    std::vector<int> sub;
                    while (j < keyed.size() && keyed[j].first == keyed[i].first)
                        sub.push_back(keyed[j++].second);
                    if (sub.size() != cell.size()) changed = true;
                    next.push_back(std::move(sub));
                    i = j;
                }
            }
            cells.swap(next);
        }
    }

    void descend(const Cells& cells, int depth) {
        int target = -1;
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i].size() >= 2) {
                target = static_cast<int>(i);
                break;
            }
        if (target < 0) {
            leaf(cells);
            return;
        }
        std::vector<int> tried;
        for (int v : cells[static_cast<std::size_t>(target)]) {
            if (depth == 0) {
                // Orbit pruning: a branch vertex equivalent to an already
                // explored one under the automorphisms found so far only
                // repeats that subtree.
                bool skip = false;
                for (int u : tried)
                    if (find(u) == find(v)) {
                        skip = true;
                        break;
                    }
                if (skip) continue;
                tried.push_back(v);
            }
            Cells child;
            child.reserve(cells.size() + 1);
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (static_cast<int>(i) != target) {
                    child.push_back(cells[i]);
                    continue;
                }
                child.push_back({v});
                std::vector<int> rest;
                rest.reserve(cells[i].size() - 1);
                for (int w : cells[i])
                    if (w != v) rest.push_back(w);
                child.push_back(std::move(rest));
            }
            refine(child);
            descend(child, depth + 1);
        }
    }

    void leaf(const Cells& cells) {
        std::vector<int> perm(n_), inv(n_);
        for (std::size_t i = 0; i < cells.size(); ++i) {
            perm[cells[i][0]] = static_cast<int>(i);
            inv[i] = cells[i][0];
        }
        std::vector<std::uint8_t> bits;
        bits.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
        for (int j = 1; j < n_; ++j)
            for (int i = 0; i < j; ++i)
                bits.push_back(g_.has_edge(inv[i], inv[j]) ? 1 : 0);
        if (first_bits_.empty() && first_perm_.empty()) {
            first_bits_ = bits;
            first_perm_ = perm;
            first_inv_ = inv;
            best_bits_ = std::move(bits);
            best_perm_ = std::move(perm);
            return;
        }
        if (bits == first_bits_) {
            std::vector<int> gen(n_);
            for (int v = 0; v < n_; ++v) gen[v] = first_inv_[perm[v]];
            bool identity = true;
            for (int v = 0; v < n_; ++v)
                if (gen[v] != v) {
                    identity = false;
                    break;
                }
            if (!identity) {
                for (int v = 0; v < n_; ++v) unite(v, gen[v]);
                generators_.push_back(std::move(gen));
            }
        }
        if (bits < best_bits_) {
            best_bits_ = std::move(bits);
            best_perm_ = std::move(perm);
        }
    }

    const Graph& g_;
    int n_;
    std::vector<int> color_;
    std::vector<int> orbit_;
    std::vector<std::uint8_t> first_bits_, best_bits_;
    std::vector<int> first_perm_, first_inv_, best_perm_;
    std::vector<std::vector<int>> generators_;
};

}  // namespace detail

inline CanonicalForm canonical_form(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> isolated, core;
    for (int v = 0; v < n; ++v) (g.degree(v) == 0 ? isolated : core).push_back(v);

    CanonicalForm out;
    out.perm.resize(n);
    const int k = static_cast<int>(isolated.size());
    for (int i = 0; i < k; ++i) out.perm[isolated[i]] = i;
    for (int i = 0; i + 1 < k; ++i) {
        std::vector<int> gen(n);
        std::iota(gen.begin(), gen.end(), 0);
        std::swap(gen[isolated[i]], gen[isolated[i + 1]]);
        out.generators.push_back(std::move(gen));
    }

    if (!core.empty()) {
        std::vector<int> core_index(n, -1);
        for (std::size_t i = 0; i < core.size(); ++i) core_index[core[i]] = static_cast<int>(i);
        std::vector<std::pair<int, int>> core_edges;
        core_edges.reserve(static_cast<std::size_t>(g.edge_count()));
        for (auto [u, v] : g.edges()) core_edges.emplace_back(core_index[u], core_index[v]);
        Graph cg = Graph::from_edges(static_cast<int>(core.size()), core_edges);

        detail::Canonicalizer canon(cg);
        canon.run();
        std::vector<int> cperm = canon.take_perm();
        for (std::size_t i = 0; i < core.size(); ++i) out.perm[core[i]] = k + cperm[i];
        for (auto& cgen : canon.take_generators()) {
            std::vector<int> gen(n);
            std::iota(gen.begin(), gen.end(), 0);
            for (std::size_t i = 0; i < core.size(); ++i) gen[core[i]] = core[cgen[i]];
            out.generators.push_back(std::move(gen));
        }
    }

    out.g6 = encode_graph6(detail::apply_permutation(g, out.perm));
    return out;
}

/// Orbit representative (smallest member) per vertex under the group
/// generated by `generators`.
inline std::vector<int> vertex_orbits(int n, const std::vector<std::vector<int>>& generators) {
    std::vector<int> rep(n);
    std::iota(rep.begin(), rep.end(), 0);
    auto find = [&](int v) {
        while (rep[v] != v) v = rep[v] = rep[rep[v]];
        return v;
    };
    for (const auto& gen : generators)
        for (int v = 0; v < n; ++v) {
            int a = find(v), b = find(gen[v]);
            if (a != b) rep[std::max(a, b)] = std::min(a, b);
        }
    for (int v = 0; v < n; ++v) rep[v] = find(v);
    return rep;
}

namespace detail {

inline int pair_id(int n, int u, int v) {
    if (u > v) std::swap(u, v);
    return u * n + v;
}

}  // namespace detail

/// The orbit of the unordered pair `start` under the generated group,
/// as a sorted list of pair ids (u*n+v with u < v).
inline std::vector<int> pair_orbit(int n, const std::vector<std::vector<int>>& generators,
                                   std::pair<int, int> start) {
    std::vector<int> seen;
    std::vector<std::pair<int, int>> queue{start};
    seen.push_back(detail::pair_id(n, start.first, start.second));
    while (!queue.empty()) {
        auto [u, v] = queue.back();
        queue.pop_back();
        for (const auto& gen : generators) {
            int a = gen[u], b = gen[v];
            int id = detail::pair_id(n, a, b);
            if (!std::binary_search(seen.begin(), seen.end(), id)) {
                seen.insert(std::lower_bound(seen.begin(), seen.end(), id), id);
                queue.emplace_back(a, b);
            }
        }
    }
    return seen;
}

inline bool same_pair_orbit(int n, const std::vector<std::vector<int>>& generators,
                            std::pair<int, int> a, std::pair<int, int> b) {
    if (detail::pair_id(n, a.first, a.second) == detail::pair_id(n, b.first, b.second)) return true;
    auto orbit = pair_orbit(n, generators, a);
    return std::binary_search(orbit.begin(), orbit.end(),
                              detail::pair_id(n, b.first, b.second));
}

/// One representative (lexicographically least pair) per orbit of non-edges
/// under Aut(g), in ascending order.
inline std::vector<std::pair<int, int>> nonedge_orbit_reps(
    const Graph& g, const std::vector<std::vector<int>>& generators) {
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> reps;
    std::vector<bool> visited(static_cast<std::size_t>(n) * n, false);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v)) continue;
            if (visited[static_cast<std::size_t>(detail::pair_id(n, u, v))]) continue;
            for (int id : pair_orbit(n, generators, {u, v}))
                visited[static_cast<std::size_t>(id)] = true;
            reps.emplace_back(u, v);
        }
    return reps;
}

/// The edge occupying the highest column-order position in the canonical
/// encoding, mapped back to original labels. Requires at least one edge.
inline std::pair<int, int> canonical_edge(const Graph& g, const CanonicalForm& cf) {
    if (g.edge_count() == 0)
        throw std::invalid_argument("canonical_edge: graph has no edges");
    long best = -1;
    std::pair<int, int> result{-1, -1};
    for (auto [u, v] : g.edges()) {
        int i = cf.perm[u], j = cf.perm[v];
        if (i > j) std::swap(i, j);
        long idx = static_cast<long>(j) * (j - 1) / 2 + i;
        if (idx > best) {
            best = idx;
            result = {u, v};
        }
    }
    return result;
}

}  // namespace cyclesat
