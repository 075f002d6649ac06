#pragma once

// graph6 encoding: printable, exact, one line per graph.
// Header: byte n+63 for n <= 62, or '~' plus three bytes carrying 18 bits of n.
// Body: upper-triangle bits in column order ((0,1),(0,2),(1,2),(0,3),...),
// packed big-endian into 6-bit groups, each group offset by 63.

#include <cstdint>
#include <stdexcept>
#include <string>

#include "cyclesat/graph.hpp"

namespace cyclesat {

inline std::string encode_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(char(n + 63));
    } else {
        out.push_back(char(126));
        out.push_back(char(((n >> 12) & 63) + 63));
        out.push_back(char(((n >> 6) & 63) + 63));
        out.push_back(char((n & 63) + 63));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(char(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(char((acc << (6 - nbits)) + 63));
    return out;
}

inline Graph decode_graph6(const std::string& s) {
    for (char c : s)
        if (c < 63 || c > 126)
            throw std::runtime_error("graph6: byte out of range");
    std::size_t pos = 0;
    long n;
    if (s.empty()) throw std::runtime_error("graph6: empty string");
    if (s[0] == char(126)) {
        if (s.size() >= 2 && s[1] == char(126))
            throw std::runtime_error("graph6: 36-bit orders not supported");
        if (s.size() < 4) throw std::runtime_error("graph6: truncated order");
        n = (long(s[1] - 63) << 12) | (long(s[2] - 63) << 6) | long(s[3] - 63);
        pos = 4;
    } else {
        n = s[0] - 63;
        pos = 1;
    }
    if (n < 1 || n > kMaxVertices)
        throw std::runtime_error("graph6: order " + std::to_string(n) + " out of range [1," +
                                 std::to_string(kMaxVertices) + "]");
    const long bits = n * (n - 1) / 2;
    const std::size_t body = std::size_t((bits + 5) / 6);
    if (s.size() != pos + body)
        throw std::runtime_error("graph6: expected " + std::to_string(pos + body) +
                                 " bytes, got " + std::to_string(s.size()));
    std::vector<std::pair<int, int>> edges;
    long k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            int byte = s[pos + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
        }
    // Padding bits past the triangle must be zero.
    for (long p = bits; p < long(body) * 6; ++p) {
        int byte = s[pos + p / 6] - 63;
        if ((byte >> (5 - p % 6)) & 1) throw std::runtime_error("graph6: nonzero padding");
    }
    return Graph::from_edges(int(n), edges);
}

}  // namespace cyclesat
