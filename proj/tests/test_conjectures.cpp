#include <stdexcept>

#include <catch2/catch_amalgamated.hpp>

#include "cyclesat/conjectures.hpp"

using cyclesat::check_conjecture;
using cyclesat::SearchBudget;

TEST_CASE("even-progression prediction agrees on small n", "[conjectures]") {
    auto rep = check_conjecture(5, 2, 0, 1, 7);
    CHECK(rep.family_key == "2Z+2");
    REQUIRE(rep.rows.size() == 5);  // domain starts at n = 3
    for (const auto& row : rep.rows) {
        INFO("n=" << row.n);
        CHECK(row.verdict == "agree");
        REQUIRE(row.computed.has_value());
        CHECK(*row.computed == row.n);
    }
    CHECK(rep.rows.front().n == 3);
}

TEST_CASE("offset-one progression prediction agrees on small n", "[conjectures]") {
    long expect[] = {0, 1, 3, 4, 5, 6};
    auto rep = check_conjecture(4, 0, 0, 1, 6);
    CHECK(rep.family_key == "3Z+1");
    REQUIRE(rep.rows.size() == 6);
    for (int i = 0; i < 6; ++i) {
        CHECK(rep.rows[std::size_t(i)].verdict == "agree");
        CHECK(rep.rows[std::size_t(i)].conjectured == expect[i]);
    }
}

TEST_CASE("interval predictions agree on small n", "[conjectures]") {
    auto rep = check_conjecture(1, 6, 0, 1, 5);
    CHECK(rep.family_key == "{4,5,6}");
    for (const auto& row : rep.rows) CHECK(row.verdict == "agree");
    REQUIRE(rep.rows.size() == 5);
    CHECK(rep.rows[4].conjectured == 5);

    // At n=4 nothing in {5,6,7} is realizable, so only the complete graph is
    // saturated and the prediction of 5 edges is refuted by computed 6.
    auto rep2 = check_conjecture(2, 7, 0, 3, 4);
    CHECK(rep2.family_key == "{5,6,7}");
    REQUIRE(rep2.rows.size() == 2);
    CHECK(rep2.rows[0].verdict == "agree");
    CHECK(rep2.rows[1].verdict == "disagree");
    REQUIRE(rep2.rows[1].computed.has_value());
    CHECK(*rep2.rows[1].computed == 6);
    CHECK(rep2.rows[1].conjectured == 5);
}

TEST_CASE("interval-vs-ray comparison", "[conjectures]") {
    auto rep = check_conjecture(3, 4, 6, 3, 6);
    CHECK(rep.family_key == "{4,5,6}");
    REQUIRE(rep.rows.size() == 4);
    for (const auto& row : rep.rows) {
        CHECK(row.verdict == "agree");
        REQUIRE(row.computed.has_value());
        CHECK(*row.computed == row.conjectured);
    }
}

TEST_CASE("a budget too small yields unknown rows", "[conjectures]") {
    SearchBudget tiny;
    tiny.timeout_seconds = 1e-9;
    auto rep = check_conjecture(5, 2, 0, 8, 8, tiny);
    REQUIRE(rep.rows.size() == 1);
    CHECK(rep.rows[0].verdict == "unknown");
    CHECK_FALSE(rep.rows[0].computed.has_value());
}

TEST_CASE("parameter validation", "[conjectures]") {
    CHECK_THROWS_AS(check_conjecture(0, 0, 0, 1, 5), std::invalid_argument);
    CHECK_THROWS_AS(check_conjecture(6, 0, 0, 1, 5), std::invalid_argument);
    CHECK_THROWS_AS(check_conjecture(1, 4, 0, 1, 5), std::invalid_argument);
    CHECK_THROWS_AS(check_conjecture(2, 5, 0, 1, 5), std::invalid_argument);
    CHECK_THROWS_AS(check_conjecture(3, 2, 5, 1, 5), std::invalid_argument);
    CHECK_THROWS_AS(check_conjecture(3, 5, 4, 1, 5), std::invalid_argument);
    CHECK_THROWS_AS(check_conjecture(5, 1, 0, 1, 5), std::invalid_argument);
    CHECK_THROWS_AS(check_conjecture(4, 0, 0, 5, 4), std::invalid_argument);
    CHECK_THROWS_AS(check_conjecture(4, 0, 0, 0, 4), std::invalid_argument);
}
