#pragma once

// JSON views of the report types. Output-only except for ResultRecord
// (round-tripped by the store, defined in store.hpp). Field names here are
// frozen by the files under schemas/.

#include <nlohmann/json.hpp>

#include "cyclesat/analysis.hpp"
#include "cyclesat/conjectures.hpp"
#include "cyclesat/constructions.hpp"
#include "cyclesat/saturation.hpp"
#include "cyclesat/search.hpp"

namespace cyclesat {

inline void to_json(nlohmann::json& j, const CycleWitness& w) {
    j = nlohmann::json{{"length", w.length}, {"vertices", w.vertices}};
}

inline void to_json(nlohmann::json& j, const SaturationVerdict& v) {
    const char* status = nullptr;
    switch (v.status) {
        case SaturationVerdict::Status::saturated: status = "saturated"; break;
        case SaturationVerdict::Status::contains_forbidden: status = "contains-forbidden"; break;
        case SaturationVerdict::Status::not_maximal: status = "not-maximal"; break;
    }
    j = nlohmann::json{{"status", status}, {"probes", v.probes}};
    if (v.forbidden) j["forbidden"] = *v.forbidden;
    if (v.missing_edge)
        j["missing_edge"] = nlohmann::json::array({v.missing_edge->first, v.missing_edge->second});
}

inline void to_json(nlohmann::json& j, const SearchCounters& c) {
    j = nlohmann::json{{"graphs_enumerated", c.graphs_enumerated},
                       {"saturation_checks", c.saturation_checks},
                       {"wall_seconds", c.wall_seconds}};
}

inline void to_json(nlohmann::json& j, const SearchResult& r) {
    j = nlohmann::json{{"n", r.n},
                       {"family", r.family_key},
                       {"mode", r.mode == SearchMode::value ? "value" : "full"},
                       {"lower_bound", r.lower_bound},
                       {"witnesses", r.witnesses},
                       {"counters", r.counters},
                       {"exhaustive", r.exhaustive}};
    if (r.value)
        j["value"] = *r.value;
    else
        j["value"] = nullptr;
}

inline void to_json(nlohmann::json& j, const DegreeClasses& c) {
    j = nlohmann::json{{"d1", c.d1.to_vector()},
                       {"d2", c.d2.to_vector()},
                       {"d3", c.d3.to_vector()},
                       {"d2_0", c.d2_0.to_vector()},
                       {"d2_1_plus", c.d2_1_plus.to_vector()},
                       {"d2_1_minus", c.d2_1_minus.to_vector()},
                       {"d2_2", c.d2_2.to_vector()}};
}

inline void to_json(nlohmann::json& j, const DegeneratedPath& p) {
    j = nlohmann::json{{"vertices", p.vertices},
                       {"ext_front", p.ext_front},
                       {"ext_back", p.ext_back},
                       {"closed", p.closed}};
}

inline void to_json(nlohmann::json& j, const DegeneratedPathReport& r) {
    j = nlohmann::json{{"paths", r.paths}, {"pure_cycles", r.pure_cycles}};
}

inline void to_json(nlohmann::json& j, const MatchingViolation& v) {
    j = nlohmann::json{{"vertex", v.vertex}, {"p3", v.p3}};
}

inline void to_json(nlohmann::json& j, const ProbeReport& r) {
    j = nlohmann::json{{"leaf_neighbor_matching", r.leaf_neighbor_matching},
                       {"leaf_neighbor_min_degree", r.leaf_neighbor_min_degree},
                       {"short_degenerated_paths", r.short_degenerated_paths},
                       {"no_triangle_degenerated_path", r.no_triangle_degenerated_path},
                       {"leaf_count", r.leaf_count},
                       {"degenerated_path_count", r.degenerated_path_count}};
}

inline void to_json(nlohmann::json& j, const ChargeRow& r) {
    j = nlohmann::json{{"vertex", r.vertex},
                       {"degree", r.degree},
                       {"class", r.klass},
                       {"start_q", r.start_q},
                       {"received_q", r.received_q},
                       {"paid_q", r.paid_q},
                       {"final_q", r.final_q},
                       {"r", r.r},
                       {"s_plus", r.s_plus},
                       {"s_minus", r.s_minus},
                       {"t", r.t},
                       {"s_bound_ok", r.s_bound_ok}};
}

inline void to_json(nlohmann::json& j, const ChargeLedger& l) {
    j = nlohmann::json{{"n", l.n},
                       {"m", l.m},
                       {"rows", l.rows},
                       {"total_start_q", l.total_start_q},
                       {"total_final_q", l.total_final_q}};
}

inline void to_json(nlohmann::json& j, const ConjectureRow& r) {
    j = nlohmann::json{{"n", r.n},
                       {"conjectured", r.conjectured},
                       {"lower_bound", r.lower_bound},
                       {"verdict", r.verdict}};
    if (r.computed)
        j["computed"] = *r.computed;
    else
        j["computed"] = nullptr;
}

inline void to_json(nlohmann::json& j, const ConjectureReport& r) {
    j = nlohmann::json{
        {"id", r.id}, {"statement", r.statement}, {"family", r.family_key}, {"rows", r.rows}};
}

inline void to_json(nlohmann::json& j, const FormulaResult& r) {
    const char* status = nullptr;
    switch (r.status) {
        case FormulaResult::Status::proven: status = "proven"; break;
        case FormulaResult::Status::conjectured: status = "conjectured"; break;
        case FormulaResult::Status::bounds_only: status = "bounds-only"; break;
    }
    j = nlohmann::json{{"status", status}, {"source", r.source}, {"note", r.note}};
    if (r.value)
        j["value"] = *r.value;
    else
        j["value"] = nullptr;
    if (r.bounds)
        j["bounds"] = nlohmann::json::array({r.bounds->first, r.bounds->second});
    else
        j["bounds"] = nullptr;
}

}  // namespace cyclesat
