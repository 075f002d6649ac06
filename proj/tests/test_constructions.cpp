#include <stdexcept>

#include <catch2/catch_amalgamated.hpp>

#include "cyclesat/canonical.hpp"
#include "cyclesat/constructions.hpp"
#include "cyclesat/family.hpp"
#include "cyclesat/saturation.hpp"

using cyclesat::check_saturated;
using cyclesat::ConstructionSpec;
using cyclesat::construction_edge_count;
using cyclesat::construction_vertex_count;
using cyclesat::CycleFamily;
using cyclesat::FormulaResult;
using cyclesat::generate;
using cyclesat::progression_construction;
using cyclesat::sat_formula;

TEST_CASE("counts match the closed forms", "[constructions]") {
    std::vector<ConstructionSpec> specs;
    for (int k = 0; k <= 12; ++k) {
        specs.push_back(ConstructionSpec::friendship(k));
        specs.push_back(ConstructionSpec::friendship_plus(k));
    }
    for (int n = 1; n <= 60; ++n) specs.push_back(ConstructionSpec::sat_n(n));
    for (int n = 3; n <= 40; ++n) specs.push_back(ConstructionSpec::cycle(n));
    for (int n = 4; n <= 40; ++n) specs.push_back(ConstructionSpec::cycle_with_pendant(n));
    for (int s = 2; s <= 8; ++s)
        for (int t = 1; t <= 4; ++t)
            for (int r = 0; r <= t; ++r) specs.push_back(ConstructionSpec::j_graph(s, t, r));
    for (int n = 1; n <= 20; ++n) specs.push_back(ConstructionSpec::star(n));

    for (const auto& spec : specs) {
        auto g = generate(spec);
        INFO("kind index " << int(spec.kind));
        CHECK(g.vertex_count() == construction_vertex_count(spec));
        CHECK(long(g.edge_count()) == construction_edge_count(spec));
    }
}

TEST_CASE("friendship shapes", "[constructions]") {
    auto f2 = generate(ConstructionSpec::friendship(2));
    REQUIRE(f2.vertex_count() == 5);
    CHECK(f2.edge_count() == 6);
    CHECK(f2.degree(0) == 4);
    CHECK(f2.has_edge(1, 2));
    CHECK(f2.has_edge(3, 4));
    CHECK_FALSE(f2.has_edge(1, 3));

    auto f2p = generate(ConstructionSpec::friendship_plus(2));
    REQUIRE(f2p.vertex_count() == 10);
    CHECK(f2p.edge_count() == 11);
    // Pendant of core vertex v sits at v + 5.
    for (int v = 0; v < 5; ++v) {
        CHECK(f2p.degree(v + 5) == 1);
        CHECK(f2p.has_edge(v, v + 5));
    }

    CHECK(generate(ConstructionSpec::friendship(0)).vertex_count() == 1);
}

TEST_CASE("trimmed member hits the edge formula for every residue", "[constructions]") {
    for (int n = 1; n <= 30; ++n) {
        auto g = generate(ConstructionSpec::sat_n(n));
        INFO("n=" << n);
        CHECK(g.vertex_count() == n);
        CHECK(long(g.edge_count()) == (5L * n - 6 + 3) / 4);
        if (n >= 2) CHECK(g.is_connected());
    }
}

TEST_CASE("path-clique-pendant construction", "[constructions]") {
    auto j = generate(ConstructionSpec::j_graph(4, 2, 1));
    REQUIRE(j.vertex_count() == 7);
    CHECK(j.edge_count() == 9);
    // Path 0-1-2-3, both path ends tied to every clique vertex {4,5}.
    CHECK(j.has_edge(0, 1));
    CHECK(j.has_edge(2, 3));
    CHECK(j.has_edge(4, 5));
    CHECK(j.has_edge(0, 4));
    CHECK(j.has_edge(3, 5));
    CHECK(j.degree(6) == 1);
    CHECK(j.has_edge(4, 6));
}

TEST_CASE("progression construction picks cycles for step two", "[constructions]") {
    using cyclesat::canonical_form;
    using cyclesat::generate;
    for (int n = 5; n <= 15; ++n) {
        auto g = generate(progression_construction(2, n));
        REQUIRE(g.vertex_count() == n);
        auto expect = (n % 2 == 1) ? generate(ConstructionSpec::cycle(n))
                                   : generate(ConstructionSpec::cycle_with_pendant(n));
        CHECK(canonical_form(g).g6 == canonical_form(expect).g6);
    }
    for (int a = 3; a <= 5; ++a)
        for (int n = a + 1; n <= 25; ++n) {
            auto g = generate(progression_construction(a, n));
            INFO("a=" << a << " n=" << n);
            CHECK(g.vertex_count() == n);
            CHECK(long(g.edge_count()) == n + a * (a - 1) / 2 - 1);
        }
}

TEST_CASE("construction argument validation", "[constructions]") {
    CHECK_THROWS_AS(generate(ConstructionSpec::friendship(-1)), std::invalid_argument);
    CHECK_THROWS_AS(generate(ConstructionSpec::sat_n(0)), std::invalid_argument);
    CHECK_THROWS_AS(generate(ConstructionSpec::cycle(2)), std::invalid_argument);
    CHECK_THROWS_AS(generate(ConstructionSpec::cycle_with_pendant(3)), std::invalid_argument);
    CHECK_THROWS_AS(generate(ConstructionSpec::j_graph(1, 2, 0)), std::invalid_argument);
    CHECK_THROWS_AS(generate(ConstructionSpec::j_graph(4, 0, 0)), std::invalid_argument);
    CHECK_THROWS_AS(generate(ConstructionSpec::j_graph(4, 2, 3)), std::invalid_argument);
    CHECK_THROWS_AS(generate(ConstructionSpec::star(0)), std::invalid_argument);
    CHECK_THROWS_AS(progression_construction(1, 5), std::invalid_argument);
    CHECK_THROWS_AS(progression_construction(3, 3), std::invalid_argument);
}

TEST_CASE("generated members really are saturated", "[constructions]") {
    for (int n = 1; n <= 20; ++n) {
        auto g = generate(ConstructionSpec::sat_n(n));
        INFO("n=" << n);
        CHECK(check_saturated(g, CycleFamily::finite_set({4, 5})).saturated());
    }
    for (int n = 4; n <= 12; ++n) {
        auto g = generate(progression_construction(3, n));
        INFO("n=" << n);
        CHECK(check_saturated(g, CycleFamily::progression(3, 2)).saturated());
    }
}

TEST_CASE("formula table, proven single lengths", "[constructions]") {
    auto f3 = sat_formula(CycleFamily::finite_set({3}), 7);
    REQUIRE(f3.status == FormulaResult::Status::proven);
    CHECK(f3.value == 6);

    long expect4[] = {5, 6, 8, 9};
    for (int n = 5; n <= 8; ++n) {
        auto r = sat_formula(CycleFamily::finite_set({4}), n);
        REQUIRE(r.status == FormulaResult::Status::proven);
        CHECK(*r.value == expect4[n - 5]);
    }
    CHECK_THROWS_AS(sat_formula(CycleFamily::finite_set({4}), 4), std::out_of_range);

    auto f5 = sat_formula(CycleFamily::finite_set({5}), 21);
    REQUIRE(f5.status == FormulaResult::Status::proven);
    CHECK(*f5.value == 29);
    CHECK_THROWS_AS(sat_formula(CycleFamily::finite_set({5}), 20), std::out_of_range);

    auto f6 = sat_formula(CycleFamily::finite_set({6}), 9);
    REQUIRE(f6.status == FormulaResult::Status::bounds_only);
    REQUIRE(f6.bounds.has_value());
    CHECK(f6.bounds->first == 10);
    CHECK(f6.bounds->second == 12);
}

TEST_CASE("formula table, long single cycles", "[constructions]") {
    // Spanning cycle window.
    auto sp17 = sat_formula(CycleFamily::finite_set({17}), 17);
    REQUIRE(sp17.status == FormulaResult::Status::proven);
    CHECK(*sp17.value == 26);
    auto sp19 = sat_formula(CycleFamily::finite_set({19}), 19);
    REQUIRE(sp19.status == FormulaResult::Status::proven);
    CHECK(*sp19.value == 29);
    CHECK_THROWS_AS(sat_formula(CycleFamily::finite_set({18}), 18), std::out_of_range);

    auto b = sat_formula(CycleFamily::finite_set({7}), 9);
    REQUIRE(b.status == FormulaResult::Status::bounds_only);
    CHECK(b.bounds->first == 10);
    CHECK(b.bounds->second == 14);
    CHECK_THROWS_AS(sat_formula(CycleFamily::finite_set({7}), 8), std::out_of_range);
}

TEST_CASE("formula table, families", "[constructions]") {
    // {4,5} is exact for every n.
    for (int n = 1; n <= 12; ++n) {
        auto r = sat_formula(CycleFamily::finite_set({4, 5}), n);
        REQUIRE(r.status == FormulaResult::Status::proven);
        CHECK(*r.value == (5L * n - 6 + 3) / 4);
    }

    auto c1 = sat_formula(CycleFamily::interval(4, 6), 9);
    REQUIRE(c1.status == FormulaResult::Status::conjectured);
    CHECK(*c1.value == (5L * 9 - 6 + 3) / 4);

    auto c2 = sat_formula(CycleFamily::interval(5, 7), 30);
    REQUIRE(c2.status == FormulaResult::Status::conjectured);
    CHECK(*c2.value == (10L * 29 + 6) / 7);

    auto ray4 = sat_formula(CycleFamily::ray(4), 10);
    REQUIRE(ray4.status == FormulaResult::Status::proven);
    CHECK(*ray4.value == (5L * 10 - 6 + 3) / 4);

    auto ray5 = sat_formula(CycleFamily::ray(5), 8);
    REQUIRE(ray5.status == FormulaResult::Status::proven);
    CHECK(*ray5.value == 10);

    auto ray6 = sat_formula(CycleFamily::ray(6), 10);
    REQUIRE(ray6.status == FormulaResult::Status::proven);
    CHECK(*ray6.value == 14);
    CHECK_THROWS_AS(sat_formula(CycleFamily::ray(6), 9), std::out_of_range);

    auto even = sat_formula(CycleFamily::progression(2, 2), 9);
    REQUIRE(even.status == FormulaResult::Status::proven);
    CHECK(*even.value == 9);

    auto g1 = sat_formula(CycleFamily::progression(3, 1), 9);
    REQUIRE(g1.status == FormulaResult::Status::conjectured);
    CHECK(*g1.value == (5L * 9 - 6 + 3) / 4);

    // Odd lengths include the triangle, so the star rule wins.
    auto odd = sat_formula(CycleFamily::progression(2, 1), 9);
    REQUIRE(odd.status == FormulaResult::Status::proven);
    CHECK(*odd.value == 8);

    auto a4 = sat_formula(CycleFamily::progression(4, 2), 9);
    REQUIRE(a4.status == FormulaResult::Status::conjectured);
    CHECK(*a4.value == 9 + 6 - 1);
    CHECK_THROWS_AS(sat_formula(CycleFamily::progression(4, 2), 4), std::out_of_range);

    auto with3 = sat_formula(CycleFamily::finite_set({3, 7}), 9);
    CHECK(with3.status == FormulaResult::Status::proven);
    CHECK(*with3.value == 8);
    CHECK_THROWS_AS(sat_formula(CycleFamily::finite_set({4, 6}), 9), std::invalid_argument);
}
