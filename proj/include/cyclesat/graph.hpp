#pragma once

// Small immutable simple graphs with bitset adjacency rows.
// Labels are 0..n-1; edges are unordered pairs of distinct labels.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cyclesat {

inline constexpr int kMaxVertices = 512;
inline constexpr int kWordsMax = kMaxVertices / 64;

/// Subset of vertex labels as a fixed-width bit mask.
struct VertexSet {
    std::array<std::uint64_t, kWordsMax> w{};

    bool contains(int v) const { return (w[v >> 6] >> (v & 63)) & 1u; }
    void insert(int v) { w[v >> 6] |= std::uint64_t(1) << (v & 63); }
    void erase(int v) { w[v >> 6] &= ~(std::uint64_t(1) << (v & 63)); }

    int count() const {
        int c = 0;
        for (auto x : w) c += __builtin_popcountll(x);
        return c;
    }
    bool empty() const {
        for (auto x : w)
            if (x) return false;
        return true;
    }

    bool operator==(const VertexSet& o) const { return w == o.w; }

    template <class F>
    void for_each(F f) const {
        for (int i = 0; i < kWordsMax; ++i) {
            std::uint64_t x = w[i];
            while (x) {
                f(i * 64 + __builtin_ctzll(x));
                x &= x - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    static VertexSet full(int n) {
        VertexSet s;
        for (int v = 0; v < n; ++v) s.insert(v);
        return s;
    }
};

/// Immutable graph value. Mutating operations return a new graph.
class Graph {
public:
    explicit Graph(int n) : n_(n), words_((n + 63) / 64), m_(0) {
        if (n < 1 || n > kMaxVertices)
            throw std::invalid_argument("graph order must be in [1," +
                                        std::to_string(kMaxVertices) + "], got " +
                                        std::to_string(n));
        if (!inline_storage()) big_.assign(std::size_t(n_) * words_, 0);
    }

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) {
            g.check_pair(u, v);
            if (g.has_edge(u, v))
                throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" +
                                            std::to_string(v));
            g.set_edge(u, v);
        }
        return g;
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    int words_per_row() const { return words_; }

    bool has_edge(int u, int v) const {
        check_pair(u, v);
        return (row(u)[v >> 6] >> (v & 63)) & 1u;
    }

    int degree(int v) const {
        check_vertex(v);
        int d = 0;
        const std::uint64_t* r = row(v);
        for (int i = 0; i < words_; ++i) d += __builtin_popcountll(r[i]);
        return d;
    }

    VertexSet neighbors(int v) const {
        check_vertex(v);
        VertexSet s;
        const std::uint64_t* r = row(v);
        for (int i = 0; i < words_; ++i) s.w[i] = r[i];
        return s;
    }

    const std::uint64_t* row(int v) const { return data() + std::size_t(v) * words_; }

    template <class F>
    void for_each_neighbor(int v, F f) const {
        const std::uint64_t* r = row(v);
        for (int i = 0; i < words_; ++i) {
            std::uint64_t x = r[i];
            while (x) {
                f(i * 64 + __builtin_ctzll(x));
                x &= x - 1;
            }
        }
    }

    Graph with_edge(int u, int v) const {
        check_pair(u, v);
        if (has_edge(u, v))
            throw std::invalid_argument("edge " + std::to_string(u) + "-" +
                                        std::to_string(v) + " already present");
        Graph g(*this);
        g.set_edge(u, v);
        return g;
    }

    Graph without_edge(int u, int v) const {
        check_pair(u, v);
        if (!has_edge(u, v))
            throw std::invalid_argument("edge " + std::to_string(u) + "-" +
                                        std::to_string(v) + " not present");
        Graph g(*this);
        g.clear_edge(u, v);
        return g;
    }

    /// Edge list sorted by (min,max) pairs.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> e;
        e.reserve(m_);
        for (int u = 0; u < n_; ++u)
            for_each_neighbor(u, [&](int v) {
                if (u < v) e.emplace_back(u, v);
            });
        return e;
    }

    bool operator==(const Graph& o) const {
        if (n_ != o.n_ || m_ != o.m_) return false;
        const std::uint64_t* a = data();
        const std::uint64_t* b = o.data();
        for (std::size_t i = 0; i < std::size_t(n_) * words_; ++i)
            if (a[i] != b[i]) return false;
        return true;
    }
    bool operator!=(const Graph& o) const { return !(*this == o); }

    bool is_connected() const {
        std::array<std::uint64_t, kWordsMax> seen{}, frontier{};
        frontier[0] = 1;
        seen[0] = 1;
        bool grew = true;
        while (grew) {
            grew = false;
            std::array<std::uint64_t, kWordsMax> next{};
            for (int i = 0; i < words_; ++i) {
                std::uint64_t x = frontier[i];
                while (x) {
                    int v = i * 64 + __builtin_ctzll(x);
                    x &= x - 1;
                    const std::uint64_t* r = row(v);
                    for (int j = 0; j < words_; ++j) next[j] |= r[j];
                }
            }
            for (int j = 0; j < words_; ++j) {
                std::uint64_t fresh = next[j] & ~seen[j];
                if (fresh) {
                    seen[j] |= fresh;
                    grew = true;
                }
                frontier[j] = fresh;
            }
        }
        int c = 0;
        for (int j = 0; j < words_; ++j) c += __builtin_popcountll(seen[j]);
        return c == n_;
    }

    /// Connected component containing v.
    VertexSet component_of(int v) const {
        check_vertex(v);
        VertexSet seen;
        std::vector<int> stack{v};
        seen.insert(v);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for_each_neighbor(u, [&](int w) {
                if (!seen.contains(w)) {
                    seen.insert(w);
                    stack.push_back(w);
                }
            });
        }
        return seen;
    }

    /// GraphViz source with vertices and edges in sorted order; no layout hints.
    std::string to_dot(const std::string& name = "G") const {
        std::string out = "graph " + name + " {\n";
        for (int v = 0; v < n_; ++v) out += "  " + std::to_string(v) + ";\n";
        for (auto [u, v] : edges())
            out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
        out += "}\n";
        return out;
    }

private:
    bool inline_storage() const { return words_ == 1; }
    const std::uint64_t* data() const { return inline_storage() ? small_.data() : big_.data(); }
    std::uint64_t* data() { return inline_storage() ? small_.data() : big_.data(); }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("vertex " + std::to_string(v) +
                                        " out of range [0," + std::to_string(n_ - 1) + "]");
    }
    void check_pair(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }

    void set_edge(int u, int v) {
        data()[std::size_t(u) * words_ + (v >> 6)] |= std::uint64_t(1) << (v & 63);
        data()[std::size_t(v) * words_ + (u >> 6)] |= std::uint64_t(1) << (u & 63);
        ++m_;
    }
    void clear_edge(int u, int v) {
        data()[std::size_t(u) * words_ + (v >> 6)] &= ~(std::uint64_t(1) << (v & 63));
        data()[std::size_t(v) * words_ + (u >> 6)] &= ~(std::uint64_t(1) << (u & 63));
        --m_;
    }

    int n_;
    int words_;
    int m_;
    std::array<std::uint64_t, 64> small_{};  // rows when n <= 64, one word each
    std::vector<std::uint64_t> big_;         // rows otherwise
};

inline Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    return Graph::from_edges(n, edges);
}

}  // namespace cyclesat
