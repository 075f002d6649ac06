#include <algorithm>
#include <stdexcept>

#include <catch2/catch_amalgamated.hpp>

#include "cyclesat/graph.hpp"

using cyclesat::Graph;
using cyclesat::VertexSet;

TEST_CASE("vertex set basics", "[graph]") {
    VertexSet s;
    CHECK(s.empty());
    CHECK(s.count() == 0);
    s.insert(3);
    s.insert(70);
    s.insert(3);
    CHECK(s.count() == 2);
    CHECK(s.contains(3));
    CHECK(s.contains(70));
    CHECK_FALSE(s.contains(4));
    s.erase(3);
    CHECK_FALSE(s.contains(3));
    CHECK(s.to_vector() == std::vector<int>{70});

    auto full = VertexSet::full(5);
    CHECK(full.count() == 5);
    std::vector<int> seen;
    full.for_each([&](int v) { seen.push_back(v); });
    CHECK(seen == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("graph construction and bounds", "[graph]") {
    CHECK_THROWS_AS(Graph(0), std::invalid_argument);
    CHECK_THROWS_AS(Graph(cyclesat::kMaxVertices + 1), std::invalid_argument);
    CHECK_NOTHROW(Graph(1));
    CHECK_NOTHROW(Graph(cyclesat::kMaxVertices));

    Graph g(4);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 0);
    CHECK_THROWS_AS(g.has_edge(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(g.has_edge(-1, 2), std::invalid_argument);
}

TEST_CASE("from_edges rejects bad input", "[graph]") {
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), std::invalid_argument);
}

TEST_CASE("edge queries and immutable updates", "[graph]") {
    auto g = Graph::from_edges(4, {{0, 1}, {1, 2}});
    CHECK(g.has_edge(1, 0));
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(3) == 0);

    auto h = g.with_edge(2, 3);
    CHECK(h.edge_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK_THROWS_AS(g.with_edge(0, 1), std::invalid_argument);

    auto k = h.without_edge(0, 1);
    CHECK_FALSE(k.has_edge(0, 1));
    CHECK(h.has_edge(0, 1));
    CHECK_THROWS_AS(k.without_edge(0, 1), std::invalid_argument);

    CHECK(h.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
}

TEST_CASE("neighbors and iteration agree", "[graph]") {
    auto g = Graph::from_edges(5, {{0, 2}, {0, 4}, {2, 4}, {1, 2}});
    auto nb = g.neighbors(2);
    CHECK(nb.to_vector() == std::vector<int>{0, 1, 4});
    std::vector<int> seen;
    g.for_each_neighbor(2, [&](int v) { seen.push_back(v); });
    CHECK(seen == std::vector<int>{0, 1, 4});
    CHECK(g.degree(2) == 3);
    CHECK((g.row(2)[0] & (1ull << 4)) != 0);
}

TEST_CASE("connectivity", "[graph]") {
    auto path = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(path.is_connected());
    auto split = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(split.is_connected());
    CHECK(split.component_of(0).to_vector() == std::vector<int>{0, 1});
    CHECK(split.component_of(3).to_vector() == std::vector<int>{2, 3});
    CHECK(Graph(1).is_connected());
    CHECK_FALSE(Graph(2).is_connected());
}

TEST_CASE("equality compares structure", "[graph]") {
    auto a = Graph::from_edges(3, {{0, 1}, {1, 2}});
    auto b = Graph::from_edges(3, {{1, 2}, {0, 1}});
    auto c = Graph::from_edges(3, {{0, 1}, {0, 2}});
    CHECK(a == b);
    CHECK_FALSE(a == c);
    CHECK_FALSE(a == Graph(3));
}

TEST_CASE("large vertex counts use the wide storage path", "[graph]") {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < 100; ++i) edges.emplace_back(i, i + 1);
    auto g = Graph::from_edges(100, edges);
    CHECK(g.vertex_count() == 100);
    CHECK(g.edge_count() == 99);
    CHECK(g.is_connected());
    CHECK(g.has_edge(98, 99));
    CHECK(g.degree(50) == 2);
    auto h = g.with_edge(0, 99);
    CHECK(h.degree(99) == 2);
    CHECK(h.neighbors(99).to_vector() == std::vector<int>{0, 98});
}

TEST_CASE("dot output lists every vertex and edge", "[graph]") {
    auto g = Graph::from_edges(3, {{0, 2}});
    auto dot = g.to_dot();
    CHECK(dot.find("graph") != std::string::npos);
    CHECK(dot.find("0 -- 2") != std::string::npos);
    CHECK(dot.find("1") != std::string::npos);
}
