#include <random>
#include <stdexcept>

#include <catch2/catch_amalgamated.hpp>

#include "cyclesat/graph.hpp"
#include "cyclesat/graph6.hpp"

using cyclesat::decode_graph6;
using cyclesat::encode_graph6;
using cyclesat::Graph;

TEST_CASE("known encodings", "[graph6]") {
    CHECK(encode_graph6(Graph(1)) == "@");
    CHECK(encode_graph6(Graph::from_edges(2, {{0, 1}})) == "A_");
    CHECK(encode_graph6(Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}})) == "Bw");
    CHECK(encode_graph6(Graph(5)) == "D??");
}

TEST_CASE("decode inverts encode on random graphs", "[graph6]") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + int(rng() % 12);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3 == 0) edges.emplace_back(u, v);
        auto g = Graph::from_edges(n, edges);
        auto back = decode_graph6(encode_graph6(g));
        REQUIRE(back.vertex_count() == n);
        CHECK(back == g);
    }
}

TEST_CASE("long-form header beyond 62 vertices", "[graph6]") {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < 70; ++i) edges.emplace_back(i, i + 1);
    auto g = Graph::from_edges(70, edges);
    auto s = encode_graph6(g);
    REQUIRE(s.size() >= 4);
    CHECK(s[0] == '~');
    auto back = decode_graph6(s);
    CHECK(back == g);
}

TEST_CASE("decode rejects malformed input", "[graph6]") {
    CHECK_THROWS_AS(decode_graph6(""), std::runtime_error);
    CHECK_THROWS_AS(decode_graph6("Bw "), std::runtime_error);
    CHECK_THROWS_AS(decode_graph6("B"), std::runtime_error);      // truncated body
    CHECK_THROWS_AS(decode_graph6("Bww"), std::runtime_error);    // trailing byte
    CHECK_THROWS_AS(decode_graph6("A\x01"), std::runtime_error);  // byte below range
    CHECK_THROWS_AS(decode_graph6("~~~~~~"), std::runtime_error); // 36-bit order
}

TEST_CASE("decode rejects nonzero padding bits", "[graph6]") {
    // K2's body byte packs one bit plus five pad bits. "A_" is correct;
    // anything with pad bits set must be refused.
    CHECK(decode_graph6("A_").edge_count() == 1);
    CHECK_THROWS_AS(decode_graph6("A`"), std::runtime_error);
}
