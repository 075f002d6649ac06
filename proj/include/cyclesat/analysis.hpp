#pragma once

// Structural analysis: degree classes, degenerated paths, neighborhood
// matching checks, probe booleans, and the quarter-integer discharging
// ledger.
//
// Charge bookkeeping is integer arithmetic in quarters (ch(v) = d(v) - 5/2
// becomes 4 d(v) - 10), so conservation is an equality test, not a float
// comparison.

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclesat/graph.hpp"

namespace cyclesat {

struct DegreeClasses {
    VertexSet d1, d2, d3;  // degree exactly 1, 2, 3
    // Split of d2 by how many neighbors also have degree 2; d2_1 is divided
    // by whether that degree-2 neighbor itself sits between two degree-2
    // vertices (d2_2 membership).
    VertexSet d2_0, d2_1_plus, d2_1_minus, d2_2;
};

inline DegreeClasses degree_classes(const Graph& g) {
    DegreeClasses out;
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        switch (g.degree(v)) {
            case 1: out.d1.insert(v); break;
            case 2: out.d2.insert(v); break;
            case 3: out.d3.insert(v); break;
            default: break;
        }
    }
    auto degree2_neighbors = [&](int v) {
        int cnt = 0;
        g.for_each_neighbor(v, [&](int w) { cnt += g.degree(w) == 2 ? 1 : 0; });
        return cnt;
    };
    out.d2.for_each([&](int v) {
        int cnt = degree2_neighbors(v);
        if (cnt == 0) out.d2_0.insert(v);
        if (cnt == 2) out.d2_2.insert(v);
    });
    out.d2.for_each([&](int v) {
        if (degree2_neighbors(v) != 1) return;
        int u = -1;
        g.for_each_neighbor(v, [&](int w) {
            if (g.degree(w) == 2) u = w;
        });
        if (out.d2_2.contains(u))
            out.d2_1_plus.insert(v);
        else
            out.d2_1_minus.insert(v);
    });
    return out;
}

// A maximal path x1..xr whose vertices all have degree 2 in g. The hosts'
// remaining neighbors extend it to A(P) = x0 x1 .. xr x_{r+1}; A(P) closes
// into a cycle when x0 = x_{r+1}.
struct DegeneratedPath {
    std::vector<int> vertices;
    int ext_front = -1;  // x0
    int ext_back = -1;   // x_{r+1}
    bool closed = false;
};

struct DegeneratedPathReport {
    std::vector<DegeneratedPath> paths;
    // Components of the degree-2 set that are entire cycles of g have no
    // outside neighbors, so A(P) is undefined; they are listed here instead.
    std::vector<std::vector<int>> pure_cycles;
};

inline DegeneratedPathReport degenerated_paths(const Graph& g) {
    DegeneratedPathReport out;
    const int n = g.vertex_count();
    std::vector<bool> in_d2(static_cast<std::size_t>(n), false), used(static_cast<std::size_t>(n), false);
    for (int v = 0; v < n; ++v) in_d2[static_cast<std::size_t>(v)] = g.degree(v) == 2;

    auto d2_neighbors = [&](int v) {
        std::vector<int> res;
        g.for_each_neighbor(v, [&](int w) {
            if (in_d2[static_cast<std::size_t>(w)]) res.push_back(w);
        });
        return res;
    };

    // Path components first, walked from their lower-numbered endpoint.
    for (int v = 0; v < n; ++v) {
        if (!in_d2[static_cast<std::size_t>(v)] || used[static_cast<std::size_t>(v)]) continue;
        if (d2_neighbors(v).size() == 2) continue;  // interior or cycle member
        DegeneratedPath p;
        int prev = -1, cur = v;
        while (true) {
            used[static_cast<std::size_t>(cur)] = true;
            p.vertices.push_back(cur);
            int next = -1;
            for (int w : d2_neighbors(cur))
                if (w != prev) next = w;
            if (next < 0) break;
            prev = cur;
            cur = next;
        }
        auto other_neighbor = [&](int x, int banned) {
            int res = -1;
            g.for_each_neighbor(x, [&](int w) {
                if (w != banned) res = w;
            });
            return res;
        };
        if (p.vertices.size() == 1) {
            // Two outside neighbors; take them in increasing order.
            auto ext = g.neighbors(v).to_vector();
            p.ext_front = ext[0];
            p.ext_back = ext[1];
        } else {
            p.ext_front = other_neighbor(p.vertices.front(), p.vertices[1]);
            p.ext_back = other_neighbor(p.vertices.back(), p.vertices[p.vertices.size() - 2]);
        }
        p.closed = p.ext_front == p.ext_back;
        out.paths.push_back(std::move(p));
    }

    // Whatever degree-2 vertices remain stand in components where everyone
    // has two degree-2 neighbors: cycles of g.
    for (int v = 0; v < n; ++v) {
        if (!in_d2[static_cast<std::size_t>(v)] || used[static_cast<std::size_t>(v)]) continue;
        std::vector<int> cycle;
        int prev = -1, cur = v;
        while (true) {
            used[static_cast<std::size_t>(cur)] = true;
            cycle.push_back(cur);
            auto ns = d2_neighbors(cur);
            int next = ns[0] != prev ? ns[0] : ns[1];
            if (prev < 0) next = std::min(ns[0], ns[1]);
            prev = cur;
            cur = next;
            if (cur == v) break;
        }
        out.pure_cycles.push_back(std::move(cycle));
    }
    return out;
}

struct MatchingViolation {
    int vertex = -1;
    std::array<int, 3> p3{};  // a-b-c with both edges inside N(vertex)
};

/// Vertices whose open neighborhood induces a subgraph with a vertex of
/// degree 2 or more, each with a concrete 3-vertex path as witness. Empty
/// iff every neighborhood induces a matching.
inline std::vector<MatchingViolation> neighborhood_matching_violations(const Graph& g) {
    std::vector<MatchingViolation> out;
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        auto ns = g.neighbors(v).to_vector();
        bool found = false;
        for (int b : ns) {
            if (found) break;
            std::vector<int> inside;
            for (int a : ns)
                if (a != b && g.has_edge(a, b)) inside.push_back(a);
            if (inside.size() >= 2) {
                out.push_back({v, {inside[0], b, inside[1]}});
                found = true;
            }
        }
    }
    return out;
}

// Probes for structural properties that hold in the hypothetical minimum
// counterexamples the proofs consider. Purely descriptive; ordinary graphs
// may fail them.
struct ProbeReport {
    bool leaf_neighbor_matching = true;      // neighborhood of each leaf's support,
                                             // minus the leaf, induces a perfect matching
    bool leaf_neighbor_min_degree = true;    // every leaf's support has degree >= 5
    bool short_degenerated_paths = true;     // every maximal degenerated path has <= 2 edges
    bool no_triangle_degenerated_path = true;  // no 2-vertex degenerated path closes a triangle
    int leaf_count = 0;
    int degenerated_path_count = 0;
};

namespace detail {

inline bool induces_perfect_matching(const Graph& g, const std::vector<int>& verts) {
    for (int u : verts) {
        int inside = 0;
        for (int w : verts)
            if (w != u && g.has_edge(u, w)) ++inside;
        if (inside != 1) return false;
    }
    return true;
}

}  // namespace detail

inline ProbeReport lemma_probes(const Graph& g) {
    ProbeReport rep;
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) != 1) continue;
        ++rep.leaf_count;
        int support = g.neighbors(v).to_vector()[0];
        if (g.degree(support) < 5) rep.leaf_neighbor_min_degree = false;
        std::vector<int> rest;
        g.for_each_neighbor(support, [&](int w) {
            if (w != v) rest.push_back(w);
        });
        if (!detail::induces_perfect_matching(g, rest)) rep.leaf_neighbor_matching = false;
    }
    auto paths = degenerated_paths(g);
    rep.degenerated_path_count = static_cast<int>(paths.paths.size());
    for (const auto& p : paths.paths) {
        if (p.vertices.size() > 3) rep.short_degenerated_paths = false;
        if (p.vertices.size() == 2 && p.closed) rep.no_triangle_degenerated_path = false;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Discharging. Initial charge ch(v) = d(v) - 5/2; the four transfer rules:
//   R1  every degree-2 vertex with zero or two degree-2 neighbors gets 1/4
//       from each of its two neighbors;
//   R2  every d2_1_plus vertex gets 3/4 from its only neighbor of degree > 2;
//   R3  every d2_1_minus vertex gets 1/2 from that neighbor;
//   R4  every leaf gets 3/2 from its only neighbor.
// The rules are defined only on structures where each transfer has a
// well-defined payer able to restore every degree-1/2 vertex to charge 0;
// anything else is rejected with the offending vertex named.

class DischargeError : public std::runtime_error {
  public:
    DischargeError(int vertex, const std::string& message)
        : std::runtime_error(message), vertex_(vertex) {}
    int vertex() const { return vertex_; }

  private:
    int vertex_;
};

struct ChargeRow {
    int vertex = 0;
    int degree = 0;
    std::string klass;  // D1 | D2^0 | D2^1+ | D2^1- | D2^2 | other
    long start_q = 0, received_q = 0, paid_q = 0, final_q = 0;  // quarters
    // Neighbor breakdown: r in d2_0, s_plus in d2_1_plus, s_minus in
    // d2_1_minus, t outside d2 entirely.
    int r = 0, s_plus = 0, s_minus = 0, t = 0;
    bool s_bound_ok = true;  // 2 s_plus + s_minus <= 2; descriptive only
};

struct ChargeLedger {
    int n = 0;
    long m = 0;
    std::vector<ChargeRow> rows;
    long total_start_q = 0;  // 8m - 10n
    long total_final_q = 0;  // equal to total_start_q: transfers conserve
};

inline ChargeLedger discharge(const Graph& g) {
    const int n = g.vertex_count();
    DegreeClasses cls = degree_classes(g);

    auto check_d2_1 = [&](int v) {
        int w = -1;
        g.for_each_neighbor(v, [&](int u) {
            if (g.degree(u) != 2) w = u;
        });
        if (w < 0 || g.degree(w) <= 2)
            throw DischargeError(
                v, "discharge: vertex " + std::to_string(v) +
                       " has degree 2 and its non-degree-2 neighbor " +
                       (w < 0 ? std::string("is missing")
                              : std::to_string(w) + " has degree " +
                                    std::to_string(g.degree(w))) +
                       "; no payer of degree more than 2 exists");
    };
    cls.d2_1_plus.for_each(check_d2_1);
    cls.d2_1_minus.for_each(check_d2_1);
    cls.d1.for_each([&](int v) {
        int support = g.neighbors(v).to_vector()[0];
        if (g.degree(support) <= 2)
            throw DischargeError(
                v, "discharge: vertex " + std::to_string(v) + " is a leaf whose neighbor " +
                       std::to_string(support) + " has degree " +
                       std::to_string(g.degree(support)) +
                       "; the leaf rule cannot restore both to charge 0");
    });
    cls.d2_2.for_each([&](int v) {
        g.for_each_neighbor(v, [&](int u) {
            if (cls.d2_2.contains(u))
                throw DischargeError(
                    v, "discharge: vertices " + std::to_string(v) + " and " + std::to_string(u) +
                           " are adjacent and both flanked by degree-2 neighbors; the rules do" +
                           " not cover degree-2 chains this long");
        });
    });

    std::vector<long> received(static_cast<std::size_t>(n), 0), paid(static_cast<std::size_t>(n), 0);
    auto transfer = [&](int from, int to, long quarters) {
        paid[static_cast<std::size_t>(from)] += quarters;
        received[static_cast<std::size_t>(to)] += quarters;
    };
    auto r1 = [&](int v) { g.for_each_neighbor(v, [&](int w) { transfer(w, v, 1); }); };
    cls.d2_0.for_each(r1);
    cls.d2_2.for_each(r1);
    auto support_of = [&](int v) {
        int w = -1;
        g.for_each_neighbor(v, [&](int u) {
            if (g.degree(u) > 2) w = u;
        });
        return w;
    };
    cls.d2_1_plus.for_each([&](int v) { transfer(support_of(v), v, 3); });
    cls.d2_1_minus.for_each([&](int v) { transfer(support_of(v), v, 2); });
    cls.d1.for_each([&](int v) { transfer(g.neighbors(v).to_vector()[0], v, 6); });

    ChargeLedger ledger;
    ledger.n = n;
    ledger.m = g.edge_count();
    ledger.rows.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        ChargeRow row;
        row.vertex = v;
        row.degree = g.degree(v);
        if (cls.d1.contains(v)) row.klass = "D1";
        else if (cls.d2_0.contains(v)) row.klass = "D2^0";
        else if (cls.d2_1_plus.contains(v)) row.klass = "D2^1+";
        else if (cls.d2_1_minus.contains(v)) row.klass = "D2^1-";
        else if (cls.d2_2.contains(v)) row.klass = "D2^2";
        else row.klass = "other";
        row.start_q = 4L * row.degree - 10;
        row.received_q = received[static_cast<std::size_t>(v)];
        row.paid_q = paid[static_cast<std::size_t>(v)];
        row.final_q = row.start_q + row.received_q - row.paid_q;
        g.for_each_neighbor(v, [&](int w) {
            if (cls.d2_0.contains(w)) ++row.r;
            else if (cls.d2_1_plus.contains(w)) ++row.s_plus;
            else if (cls.d2_1_minus.contains(w)) ++row.s_minus;
            else if (!cls.d2.contains(w)) ++row.t;
        });
        row.s_bound_ok = 2 * row.s_plus + row.s_minus <= 2;
        ledger.total_start_q += row.start_q;
        ledger.total_final_q += row.final_q;
        ledger.rows.push_back(std::move(row));
    }

    if (ledger.total_final_q != ledger.total_start_q ||
        ledger.total_start_q != 8 * ledger.m - 10L * n)
        throw std::logic_error("discharge: conservation broken");
    for (const auto& row : ledger.rows)
        if ((row.degree == 1 || row.degree == 2) && row.final_q != 0)
            throw std::logic_error("discharge: degree-1/2 vertex ended with nonzero charge");
    return ledger;
}

}  // namespace cyclesat
