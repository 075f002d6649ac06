// Command-line front end for the cycle-saturation library: constructions,
// saturation verification, exhaustive search, structural probes, discharging
// ledgers, conjecture scans, closed-form lookups, and a JSON-lines store of
// search results.
//
// Exit codes: 0 success; 1 negative verification outcome (not saturated,
// discharge precondition rejected, reverify failure, query miss); 2 usage or
// malformed input; 3 budget exhausted before a definitive answer.

#include <climits>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cyclesat/analysis.hpp"
#include "cyclesat/conjectures.hpp"
#include "cyclesat/constructions.hpp"
#include "cyclesat/family.hpp"
#include "cyclesat/graph.hpp"
#include "cyclesat/graph6.hpp"
#include "cyclesat/json_io.hpp"
#include "cyclesat/search.hpp"
#include "cyclesat/store.hpp"
#include "cyclesat/version.hpp"

namespace {

using nlohmann::json;
using namespace cyclesat;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitExhausted = 3;

std::string quarters(long q) {
    if (q % 4 == 0) return std::to_string(q / 4);
    std::string sign = q < 0 ? "-" : "";
    long a = std::labs(q);
    if (a % 2 == 0) return sign + std::to_string(a / 2) + "/2";
    return sign + std::to_string(a) + "/4";
}

std::string join(const std::vector<int>& xs, const char* sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

std::vector<Graph> read_graphs(const std::string& g6_flag) {
    std::vector<Graph> out;
    if (!g6_flag.empty()) {
        out.push_back(decode_graph6(g6_flag));
        return out;
    }
    std::string line;
    while (std::getline(std::cin, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        out.push_back(decode_graph6(line));
    }
    if (out.empty())
        throw std::runtime_error("no input graphs (pass --graph6 or pipe graph6 lines)");
    return out;
}

std::string resolve_store(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("SATDB"); env && *env) return env;
    return "satdb.jsonl";
}

struct ConstructArgs {
    std::string kind;
    int k = INT_MIN, n = INT_MIN, s = INT_MIN, t = INT_MIN, r = 0, a = INT_MIN;
    bool as_json = false, as_dot = false;
};

int run_construct(const ConstructArgs& args) {
    auto need = [](int v, const char* flag) {
        if (v == INT_MIN)
            throw std::runtime_error(std::string("missing required option ") + flag +
                                     " for this kind");
        return v;
    };
    ConstructionSpec spec = [&] {
        if (args.kind == "friendship") return ConstructionSpec::friendship(need(args.k, "--k"));
        if (args.kind == "friendship-plus")
            return ConstructionSpec::friendship_plus(need(args.k, "--k"));
        if (args.kind == "sat-n") return ConstructionSpec::sat_n(need(args.n, "--n"));
        if (args.kind == "star") return ConstructionSpec::star(need(args.n, "--n"));
        if (args.kind == "j-graph")
            return ConstructionSpec::j_graph(need(args.s, "--s"), need(args.t, "--t"), args.r);
        if (args.kind == "cycle") return ConstructionSpec::cycle(need(args.n, "--n"));
        if (args.kind == "cycle-with-pendant")
            return ConstructionSpec::cycle_with_pendant(need(args.n, "--n"));
        if (args.kind == "progression")
            return progression_construction(need(args.a, "--a"), need(args.n, "--n"));
        throw std::runtime_error("unknown construction kind " + args.kind);
    }();
    Graph g = generate(spec);
    if (args.as_json) {
        json j{{"kind", args.kind},
               {"n", g.vertex_count()},
               {"m", g.edge_count()},
               {"graph6", encode_graph6(g)}};
        if (args.as_dot) j["dot"] = g.to_dot();
        std::cout << j.dump() << "\n";
    } else if (args.as_dot) {
        std::cout << g.to_dot();
    } else {
        std::cout << encode_graph6(g) << "\n";
    }
    return kExitOk;
}

int run_verify(const std::string& family_spec, const std::string& g6, bool as_json) {
    CycleFamily family = parse_family(family_spec);
    int rc = kExitOk;
    for (const Graph& g : read_graphs(g6)) {
        SaturationVerdict v = check_saturated(g, family);
        std::string enc = encode_graph6(g);
        if (as_json) {
            json j = v;
            j["family"] = family.canonical_key();
            j["graph6"] = enc;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << enc << ": ";
            switch (v.status) {
                case SaturationVerdict::Status::saturated:
                    std::cout << "saturated for " << family.canonical_key() << " ("
                              << v.probes << " non-edges checked)\n";
                    break;
                case SaturationVerdict::Status::contains_forbidden:
                    std::cout << "not saturated, contains C" << v.forbidden->length << " ("
                              << join(v.forbidden->vertices) << ")\n";
                    break;
                case SaturationVerdict::Status::not_maximal:
                    std::cout << "not saturated, edge " << v.missing_edge->first << "-"
                              << v.missing_edge->second
                              << " can be added without creating a forbidden cycle\n";
                    break;
            }
        }
        if (!v.saturated()) rc = kExitNegative;
    }
    return rc;
}

struct SearchArgs {
    int n = 0;
    std::string family;
    std::string mode = "value";
    long max_edges = -1;
    double timeout = 0.0;
    int jobs = 1;
    bool as_json = false, no_store = false;
    std::string store;
};

int run_search(const SearchArgs& args) {
    CycleFamily family = parse_family(args.family);
    SearchBudget budget;
    budget.timeout_seconds = args.timeout;
    budget.max_edges = args.max_edges;
    budget.jobs = args.jobs;
    SearchMode mode = args.mode == "full" ? SearchMode::full : SearchMode::value;

    SearchResult result = compute_sat(args.n, family, budget, mode);

    if (!args.no_store) {
        ResultRecord rec;
        rec.family_key = result.family_key;
        rec.n = result.n;
        rec.value = result.value;
        rec.lower_bound = result.lower_bound;
        rec.exhaustive = result.exhaustive;
        rec.witnesses = result.witnesses;
        rec.tool_version = kVersion;
        rec.timestamp = utc_timestamp_now();
        rec.wall_seconds = result.counters.wall_seconds;
        std::string path = resolve_store(args.store);
        ResultStore(path).append(rec);
        std::cerr << "recorded in " << path << "\n";
    }

    if (args.as_json) {
        std::cout << json(result).dump() << "\n";
    } else if (result.value) {
        std::cout << "sat(" << result.n << ", " << result.family_key << ") = " << *result.value
                  << (result.exhaustive ? "" : "  [witness list incomplete]") << "\n";
        if (mode == SearchMode::full) {
            std::cout << result.witnesses.size() << " witness class"
                      << (result.witnesses.size() == 1 ? "" : "es") << ":\n";
            for (const auto& w : result.witnesses) std::cout << "  " << w << "\n";
        }
        std::cout << result.counters.graphs_enumerated << " classes enumerated, "
                  << result.counters.saturation_checks << " saturation checks, " << std::fixed
                  << std::setprecision(2) << result.counters.wall_seconds << " s\n";
    } else {
        std::cout << "sat(" << result.n << ", " << result.family_key
                  << ") >= " << result.lower_bound << "  [budget exhausted]\n";
    }
    return result.value ? kExitOk : kExitExhausted;
}

void print_class(const char* label, const VertexSet& s) {
    auto xs = s.to_vector();
    std::cout << "  " << label << ": " << (xs.empty() ? "-" : join(xs)) << "\n";
}

int run_probe(const std::string& g6, bool as_json) {
    auto graphs = read_graphs(g6);
    for (const Graph& g : graphs) {
        DegreeClasses cls = degree_classes(g);
        DegeneratedPathReport paths = degenerated_paths(g);
        auto violations = neighborhood_matching_violations(g);
        ProbeReport probes = lemma_probes(g);
        std::string enc = encode_graph6(g);
        if (as_json) {
            json j{{"graph6", enc},
                   {"n", g.vertex_count()},
                   {"m", g.edge_count()},
                   {"degree_classes", cls},
                   {"degenerated_paths", paths},
                   {"matching_violations", violations},
                   {"probes", probes}};
            std::cout << j.dump() << "\n";
            continue;
        }
        if (graphs.size() > 1) std::cout << "== " << enc << "\n";
        std::cout << "n=" << g.vertex_count() << " m=" << g.edge_count() << "\n";
        std::cout << "degree classes\n";
        print_class("d1", cls.d1);
        print_class("d2", cls.d2);
        print_class("d3", cls.d3);
        print_class("d2_0", cls.d2_0);
        print_class("d2_1+", cls.d2_1_plus);
        print_class("d2_1-", cls.d2_1_minus);
        print_class("d2_2", cls.d2_2);
        std::cout << "degenerated paths\n";
        if (paths.paths.empty() && paths.pure_cycles.empty()) std::cout << "  none\n";
        for (const auto& p : paths.paths)
            std::cout << "  P: " << join(p.vertices, "-") << "  A(P): " << p.ext_front << "-"
                      << join(p.vertices, "-") << "-" << p.ext_back
                      << (p.closed ? "  (closed)" : "  (open)") << "\n";
        for (const auto& c : paths.pure_cycles)
            std::cout << "  2-regular cycle: " << join(c, "-") << "\n";
        std::cout << "matching violations\n";
        if (violations.empty()) std::cout << "  none\n";
        for (const auto& v : violations)
            std::cout << "  vertex " << v.vertex << ": path " << v.p3[0] << "-" << v.p3[1] << "-"
                      << v.p3[2] << " inside its neighborhood\n";
        auto yn = [](bool b) { return b ? "yes" : "no"; };
        std::cout << "probes\n"
                  << "  leaf_neighbor_matching: " << yn(probes.leaf_neighbor_matching) << "\n"
                  << "  leaf_neighbor_min_degree: " << yn(probes.leaf_neighbor_min_degree) << "\n"
                  << "  short_degenerated_paths: " << yn(probes.short_degenerated_paths) << "\n"
                  << "  no_triangle_degenerated_path: "
                  << yn(probes.no_triangle_degenerated_path) << "\n"
                  << "  leaves: " << probes.leaf_count
                  << ", degenerated paths: " << probes.degenerated_path_count << "\n";
    }
    return kExitOk;
}

int run_discharge(const std::string& g6, bool as_json) {
    auto graphs = read_graphs(g6);
    int rc = kExitOk;
    for (const Graph& g : graphs) {
        std::string enc = encode_graph6(g);
        ChargeLedger ledger;
        try {
            ledger = discharge(g);
        } catch (const DischargeError& e) {
            std::cerr << enc << ": rejected, " << e.what() << "\n";
            rc = kExitNegative;
            continue;
        }
        if (as_json) {
            json j = ledger;
            j["graph6"] = enc;
            std::cout << j.dump() << "\n";
            continue;
        }
        if (graphs.size() > 1) std::cout << "== " << enc << "\n";
        std::cout << "vertex degree  class   start    recv    paid   final  r s+ s-  t 2s++s-<=2\n";
        for (const auto& row : ledger.rows)
            std::cout << std::setw(6) << row.vertex << std::setw(7) << row.degree << std::setw(7)
                      << row.klass << std::setw(8) << quarters(row.start_q) << std::setw(8)
                      << quarters(row.received_q) << std::setw(8) << quarters(row.paid_q)
                      << std::setw(8) << quarters(row.final_q) << std::setw(3) << row.r
                      << std::setw(3) << row.s_plus << std::setw(3) << row.s_minus << std::setw(3)
                      << row.t << std::setw(10) << (row.s_bound_ok ? "yes" : "no") << "\n";
        std::cout << "total charge: start " << quarters(ledger.total_start_q) << ", final "
                  << quarters(ledger.total_final_q) << " (2m - 5n/2 = "
                  << quarters(8 * ledger.m - 10L * ledger.n) << ", conserved)\n";
    }
    return rc;
}

struct ConjectureArgs {
    int id = 0;
    int r = INT_MIN, s = INT_MIN, a = INT_MIN;
    int n_from = 1, n_to = 8;
    double timeout = 0.0;
    int jobs = 1;
    bool as_json = false;
};

int run_conjecture(const ConjectureArgs& args) {
    auto need = [](int v, const char* flag) {
        if (v == INT_MIN)
            throw std::runtime_error(std::string("missing required option ") + flag +
                                     " for this conjecture");
        return v;
    };
    int p1 = 0, p2 = 0;
    switch (args.id) {
        case 1:
        case 2: p1 = need(args.r, "--r"); break;
        case 3:
            p1 = need(args.s, "--s");
            p2 = need(args.r, "--r");
            break;
        case 4: break;
        case 5: p1 = need(args.a, "--a"); break;
        default: throw std::runtime_error("conjecture id must be 1..5");
    }
    SearchBudget budget;
    budget.timeout_seconds = args.timeout;
    budget.jobs = args.jobs;
    ConjectureReport rep = check_conjecture(args.id, p1, p2, args.n_from, args.n_to, budget);

    bool unknown = false;
    for (const auto& row : rep.rows) unknown = unknown || row.verdict == "unknown";

    if (args.as_json) {
        std::cout << json(rep).dump() << "\n";
    } else {
        std::cout << "conjecture " << rep.id << ": " << rep.statement << "\n";
        for (const auto& row : rep.rows) {
            std::cout << "  n=" << std::left << std::setw(4) << row.n << std::right
                      << " conjectured=" << std::setw(4) << row.conjectured << " computed=";
            if (row.computed)
                std::cout << std::setw(4) << *row.computed;
            else
                std::cout << std::setw(4) << ("?>=" + std::to_string(row.lower_bound));
            std::cout << "  " << row.verdict << "\n";
        }
    }
    return unknown ? kExitExhausted : kExitOk;
}

int run_formula(const std::string& family_spec, int n, bool as_json) {
    CycleFamily family = parse_family(family_spec);
    FormulaResult res = sat_formula(family, n);
    if (as_json) {
        json j = res;
        j["family"] = family.canonical_key();
        j["n"] = n;
        std::cout << j.dump() << "\n";
        return kExitOk;
    }
    const char* status = res.status == FormulaResult::Status::proven        ? "proven"
                         : res.status == FormulaResult::Status::conjectured ? "conjectured"
                                                                            : "bounds only";
    std::cout << "sat(" << n << ", " << family.canonical_key() << ")";
    if (res.value)
        std::cout << " = " << *res.value;
    else
        std::cout << " in [" << res.bounds->first << ", " << res.bounds->second << "]";
    std::cout << " (" << status << "; " << res.source << ")";
    if (!res.note.empty()) std::cout << " -- " << res.note;
    std::cout << "\n";
    return kExitOk;
}

int run_store_query(const std::string& store, const std::string& family_spec, int n,
                    bool as_json) {
    std::string key = parse_family(family_spec).canonical_key();
    std::string path = resolve_store(store);
    auto rec = ResultStore(path).query(key, n);
    if (!rec) {
        std::cerr << "no record for sat(" << n << ", " << key << ") in " << path << "\n";
        return kExitNegative;
    }
    if (as_json) {
        std::cout << json(*rec).dump() << "\n";
        return kExitOk;
    }
    std::cout << "sat(" << rec->n << ", " << rec->family_key << ")";
    if (rec->value)
        std::cout << " = " << *rec->value;
    else
        std::cout << " >= " << rec->lower_bound;
    std::cout << (rec->exhaustive ? "  [exhaustive]" : "  [partial]") << "  "
              << rec->witnesses.size() << " witness(es), recorded " << rec->timestamp
              << " by version " << rec->tool_version << "\n";
    return kExitOk;
}

int run_store_merge(const std::vector<std::string>& inputs, const std::string& output) {
    long kept = store_merge(inputs, output);
    std::cout << kept << " record(s) -> " << output << "\n";
    return kExitOk;
}

int run_store_reverify(const std::string& store, bool as_json) {
    std::string path = resolve_store(store);
    auto records = ResultStore(path).all();
    if (records.empty()) {
        std::cerr << "store " << path << " has no records\n";
        return kExitNegative;
    }
    int rc = kExitOk;
    for (const auto& rec : records) {
        std::string detail = "ok";
        bool ok = true;
        if (!rec.value) {
            detail = "no value recorded; nothing to verify";
        } else {
            try {
                CycleFamily family = parse_family(rec.family_key);
                if (rec.witnesses.empty()) {
                    ok = false;
                    detail = "record has a value but no witnesses";
                }
                for (const auto& w : rec.witnesses) {
                    Graph g = decode_graph6(w);
                    if (g.vertex_count() != rec.n) {
                        ok = false;
                        detail = "witness " + w + " has wrong order";
                        break;
                    }
                    if (g.edge_count() != *rec.value) {
                        ok = false;
                        detail = "witness " + w + " has wrong edge count";
                        break;
                    }
                    if (!check_saturated(g, family).saturated()) {
                        ok = false;
                        detail = "witness " + w + " is not saturated";
                        break;
                    }
                }
            } catch (const std::exception& e) {
                ok = false;
                detail = e.what();
            }
        }
        if (as_json) {
            std::cout << json{{"family", rec.family_key},
                              {"n", rec.n},
                              {"ok", ok},
                              {"detail", detail}}
                             .dump()
                      << "\n";
        } else {
            std::cout << (ok ? "OK   " : "FAIL ") << "sat(" << rec.n << ", " << rec.family_key
                      << ")";
            if (rec.value) std::cout << " = " << *rec.value;
            std::cout << ": " << detail << "\n";
        }
        if (!ok) rc = kExitNegative;
    }
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cycle saturation toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    ConstructArgs cons;
    auto* construct_cmd = app.add_subcommand("construct", "emit a named construction");
    construct_cmd
        ->add_option("--kind", cons.kind, "construction kind")
        ->required()
        ->check(CLI::IsMember({"friendship", "friendship-plus", "sat-n", "star", "j-graph",
                               "cycle", "cycle-with-pendant", "progression"}));
    construct_cmd->add_option("--k", cons.k, "triangle count (friendship kinds)");
    construct_cmd->add_option("--n", cons.n, "vertex count");
    construct_cmd->add_option("--s", cons.s, "path length in vertices (j-graph)");
    construct_cmd->add_option("--t", cons.t, "clique size (j-graph)");
    construct_cmd->add_option("--r", cons.r, "pendant count (j-graph)");
    construct_cmd->add_option("--a", cons.a, "progression step");
    construct_cmd->add_flag("--json", cons.as_json, "emit JSON");
    construct_cmd->add_flag("--dot", cons.as_dot, "emit GraphViz DOT");

    std::string verify_family, verify_g6;
    bool verify_json = false;
    auto* verify_cmd =
        app.add_subcommand("verify", "check saturation of graphs (stdin graph6 or --graph6)");
    verify_cmd->add_option("--family", verify_family, "forbidden cycle family")->required();
    verify_cmd->add_option("--graph6", verify_g6, "single graph6 input");
    verify_cmd->add_flag("--json", verify_json, "emit JSON lines");

    SearchArgs search;
    auto* search_cmd = app.add_subcommand("search", "compute sat(n, family) exhaustively");
    search_cmd->add_option("--n", search.n, "vertex count")->required()->check(CLI::PositiveNumber);
    search_cmd->add_option("--family", search.family, "forbidden cycle family")->required();
    search_cmd->add_option("--mode", search.mode, "value: stop at first witness; full: all")
        ->check(CLI::IsMember({"value", "full"}));
    search_cmd->add_option("--max-edges", search.max_edges, "cap the edge levels explored");
    search_cmd->add_option("--timeout", search.timeout, "wall clock budget in seconds");
    search_cmd->add_option("--jobs", search.jobs, "worker threads (full mode)");
    search_cmd->add_flag("--json", search.as_json, "emit JSON");
    search_cmd->add_option("--store", search.store, "result store path (else $SATDB, else satdb.jsonl)");
    search_cmd->add_flag("--no-store", search.no_store, "do not record the result");

    std::string probe_g6;
    bool probe_json = false;
    auto* probe_cmd = app.add_subcommand(
        "probe", "degree classes, degenerated paths, matching violations, lemma probes");
    probe_cmd->add_option("--graph6", probe_g6, "single graph6 input");
    probe_cmd->add_flag("--json", probe_json, "emit JSON lines");

    std::string discharge_g6;
    bool discharge_json = false;
    auto* discharge_cmd =
        app.add_subcommand("discharge", "run the charge redistribution ledger");
    discharge_cmd->add_option("--graph6", discharge_g6, "single graph6 input");
    discharge_cmd->add_flag("--json", discharge_json, "emit JSON lines");

    ConjectureArgs conj;
    auto* conjecture_cmd =
        app.add_subcommand("conjecture", "compare a conjectured formula against the search");
    conjecture_cmd->add_option("--id", conj.id, "conjecture id 1..5")->required();
    conjecture_cmd->add_option("--r", conj.r, "cycle length bound (ids 1, 2, 3)");
    conjecture_cmd->add_option("--s", conj.s, "interval start (id 3)");
    conjecture_cmd->add_option("--a", conj.a, "progression step (id 5)");
    conjecture_cmd->add_option("--n-from", conj.n_from, "first n");
    conjecture_cmd->add_option("--n-to", conj.n_to, "last n");
    conjecture_cmd->add_option("--timeout", conj.timeout, "per-search budget in seconds");
    conjecture_cmd->add_option("--jobs", conj.jobs, "worker threads");
    conjecture_cmd->add_flag("--json", conj.as_json, "emit JSON");

    std::string formula_family;
    int formula_n = 0;
    bool formula_json = false;
    auto* formula_cmd = app.add_subcommand("formula", "closed-form saturation lookup");
    formula_cmd->add_option("--family", formula_family, "forbidden cycle family")->required();
    formula_cmd->add_option("--n", formula_n, "vertex count")->required()->check(CLI::PositiveNumber);
    formula_cmd->add_flag("--json", formula_json, "emit JSON");

    auto* store_cmd = app.add_subcommand("store", "inspect and maintain the result store");
    store_cmd->require_subcommand(1);
    std::string q_store, q_family;
    int q_n = 0;
    bool q_json = false;
    auto* query_cmd = store_cmd->add_subcommand("query", "newest exhaustive record for (family, n)");
    query_cmd->add_option("--family", q_family, "forbidden cycle family")->required();
    query_cmd->add_option("--n", q_n, "vertex count")->required()->check(CLI::PositiveNumber);
    query_cmd->add_option("--store", q_store, "result store path");
    query_cmd->add_flag("--json", q_json, "emit JSON");

    std::vector<std::string> merge_inputs;
    std::string merge_output;
    auto* merge_cmd = store_cmd->add_subcommand("merge", "merge stores, one record per (family, n)");
    merge_cmd->add_option("--output", merge_output, "merged store path")->required();
    merge_cmd->add_option("inputs", merge_inputs, "input stores")->required()->expected(-1);

    std::string rv_store;
    bool rv_json = false;
    auto* reverify_cmd =
        store_cmd->add_subcommand("reverify", "re-check every stored witness from scratch");
    reverify_cmd->add_option("--store", rv_store, "result store path");
    reverify_cmd->add_flag("--json", rv_json, "emit JSON lines");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(construct_cmd)) return run_construct(cons);
        if (app.got_subcommand(verify_cmd)) return run_verify(verify_family, verify_g6, verify_json);
        if (app.got_subcommand(search_cmd)) return run_search(search);
        if (app.got_subcommand(probe_cmd)) return run_probe(probe_g6, probe_json);
        if (app.got_subcommand(discharge_cmd)) return run_discharge(discharge_g6, discharge_json);
        if (app.got_subcommand(conjecture_cmd)) return run_conjecture(conj);
        if (app.got_subcommand(formula_cmd)) return run_formula(formula_family, formula_n, formula_json);
        if (store_cmd->got_subcommand(query_cmd))
            return run_store_query(q_store, q_family, q_n, q_json);
        if (store_cmd->got_subcommand(merge_cmd)) return run_store_merge(merge_inputs, merge_output);
        if (store_cmd->got_subcommand(reverify_cmd)) return run_store_reverify(rv_store, rv_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
