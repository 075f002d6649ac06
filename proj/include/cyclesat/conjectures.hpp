#pragma once

// Comparison reports for the five open predictions about sat(n, C_I).
// Each row pits the predicted closed form against what compute_sat actually
// finds; the report never asserts a prediction, it only labels rows
// agree / disagree / unknown (unknown = the budget ran out first).

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclesat/constructions.hpp"
#include "cyclesat/family.hpp"
#include "cyclesat/search.hpp"

namespace cyclesat {

struct ConjectureRow {
    int n = 0;
    long conjectured = 0;
    std::optional<long> computed;  // absent when the budget tripped
    long lower_bound = 0;
    std::string verdict;  // agree | disagree | unknown
};

struct ConjectureReport {
    int id = 0;
    std::string statement;   // human summary of the prediction instance
    std::string family_key;  // family being searched (id 3 compares two)
    std::vector<ConjectureRow> rows;
};

namespace detail {

inline ConjectureRow make_row(int n, long conjectured, const SearchResult& sr) {
    ConjectureRow row;
    row.n = n;
    row.conjectured = conjectured;
    row.lower_bound = sr.lower_bound;
    if (sr.value && sr.exhaustive) {
        row.computed = *sr.value;
        row.verdict = *sr.value == conjectured ? "agree" : "disagree";
    } else if (sr.lower_bound > conjectured) {
        row.verdict = "disagree";  // already impossible below the bound
    } else {
        row.verdict = "unknown";
    }
    return row;
}

}  // namespace detail

/// id 1 (parameter r >= 5): sat(n, C_[4,r]) = ceil(5n/4 - 3/2).
/// id 2 (parameter r >= 6): sat(n, C_[5,r]) = ceil(10(n-1)/7).
/// id 3 (parameters s, r with r >= s >= 3): sat(n, C_[s,r]) = sat(n, C_[s,inf)).
/// id 4 (no parameter): sat(n, C_{3Z+1}) = ceil(5n/4 - 3/2).
/// id 5 (parameter a >= 2): sat(n, C_{aZ+2}) = n + C(a,2) - 1 for n >= a+1.
/// Rows below a prediction's stated domain are omitted.
inline ConjectureReport check_conjecture(int id, int param1, int param2, int n_from, int n_to,
                                         SearchBudget budget = {}) {
    ConjectureReport rep;
    rep.id = id;
    if (n_from < 1 || n_to < n_from)
        throw std::invalid_argument("check_conjecture: bad n range");

    auto sat_of = [&](int n, const CycleFamily& f) {
        return compute_sat(n, f, budget, SearchMode::value);
    };

    switch (id) {
        case 1: {
            int r = param1;
            if (r < 5) throw std::invalid_argument("check_conjecture: id 1 needs r >= 5");
            CycleFamily f = CycleFamily::interval(4, r);
            rep.family_key = f.canonical_key();
            rep.statement = "sat(n, C_[4," + std::to_string(r) + "]) = ceil(5n/4 - 3/2)";
            for (int n = n_from; n <= n_to; ++n)
                rep.rows.push_back(detail::make_row(n, detail::five_quarters(n), sat_of(n, f)));
            break;
        }
        case 2: {
            int r = param1;
            if (r < 6) throw std::invalid_argument("check_conjecture: id 2 needs r >= 6");
            CycleFamily f = CycleFamily::interval(5, r);
            rep.family_key = f.canonical_key();
            rep.statement = "sat(n, C_[5," + std::to_string(r) + "]) = ceil(10(n-1)/7)";
            for (int n = n_from; n <= n_to; ++n)
                rep.rows.push_back(detail::make_row(n, detail::ten_sevenths(n), sat_of(n, f)));
            break;
        }
        case 3: {
            int s = param1, r = param2;
            if (s < 3 || r < s)
                throw std::invalid_argument("check_conjecture: id 3 needs r >= s >= 3");
            CycleFamily finite = CycleFamily::interval(s, r);
            CycleFamily ray = CycleFamily::ray(s);
            rep.family_key = finite.canonical_key();
            rep.statement = "sat(n, C_[" + std::to_string(s) + "," + std::to_string(r) +
                            "]) = sat(n, C_[" + std::to_string(s) + ",inf))";
            for (int n = n_from; n <= n_to; ++n) {
                SearchResult target = sat_of(n, ray);
                if (!target.value || !target.exhaustive) {
                    ConjectureRow row;
                    row.n = n;
                    row.conjectured = target.lower_bound;
                    row.lower_bound = target.lower_bound;
                    row.verdict = "unknown";
                    rep.rows.push_back(row);
                    continue;
                }
                rep.rows.push_back(detail::make_row(n, *target.value, sat_of(n, finite)));
            }
            break;
        }
        case 4: {
            CycleFamily f = CycleFamily::progression(3, 1);
            rep.family_key = f.canonical_key();
            rep.statement = "sat(n, C_{3Z+1}) = ceil(5n/4 - 3/2)";
            for (int n = n_from; n <= n_to; ++n)
                rep.rows.push_back(detail::make_row(n, detail::five_quarters(n), sat_of(n, f)));
            break;
        }
        case 5: {
            int a = param1;
            if (a < 2) throw std::invalid_argument("check_conjecture: id 5 needs a >= 2");
            CycleFamily f = CycleFamily::progression(a, 2);
            rep.family_key = f.canonical_key();
            rep.statement = "sat(n, C_{" + std::to_string(a) + "Z+2}) = n + C(" +
                            std::to_string(a) + ",2) - 1 for n >= " + std::to_string(a + 1);
            long extra = static_cast<long>(a) * (a - 1) / 2 - 1;
            for (int n = std::max(n_from, a + 1); n <= n_to; ++n)
                rep.rows.push_back(detail::make_row(n, n + extra, sat_of(n, f)));
            break;
        }
        default:
            throw std::invalid_argument("check_conjecture: id must be 1..5");
    }
    return rep;
}

}  // namespace cyclesat
