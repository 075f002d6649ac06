#pragma once

// Exact computation of sat(n, C_I) and the witness family by exhaustive
// enumeration: ascend the edge count m from n-1, enumerate one representative
// per isomorphism class at each level, and test saturation on the connected
// ones. Subtrees whose graphs already contain a forbidden cycle are cut
// (supergraphs keep the cycle, so nothing saturated lives below them).

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "cyclesat/enumerate.hpp"
#include "cyclesat/family.hpp"
#include "cyclesat/saturation.hpp"

namespace cyclesat {

struct SearchBudget {
    double timeout_seconds = 0.0;  // 0 = unlimited
    long max_edges = -1;           // -1 = up to the complete graph
    int jobs = 1;
};

enum class SearchMode { value, full };

struct SearchCounters {
    long graphs_enumerated = 0;  // classes visited at target levels
    long saturation_checks = 0;  // connected classes handed to check_saturated
    double wall_seconds = 0.0;
};

struct SearchResult {
    int n = 0;
    std::string family_key;
    SearchMode mode = SearchMode::value;
    std::optional<long> value;
    long lower_bound = 0;  // sat is known to be >= this even when value is absent
    std::vector<std::string> witnesses;  // canonical graph6, sorted
    SearchCounters counters;
    bool exhaustive = false;
};

namespace detail {

struct LevelOutcome {
    bool timed_out = false;
    std::vector<std::string> witnesses;
};

class SatSearch {
  public:
    SatSearch(int n, const CycleFamily& family, const SearchBudget& budget, SearchMode mode)
        : n_(n), family_(family), budget_(budget), mode_(mode) {
        if (budget_.timeout_seconds > 0)
            deadline_ = std::chrono::steady_clock::now() +
                        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(budget_.timeout_seconds));
    }

    SearchResult run() {
        auto start = std::chrono::steady_clock::now();
        SearchResult res;
        res.n = n_;
        res.family_key = family_.canonical_key();
        res.mode = mode_;
        res.lower_bound = n_ - 1;

        long top = static_cast<long>(n_) * (n_ - 1) / 2;
        if (budget_.max_edges >= 0) top = std::min(top, budget_.max_edges);
        bool clipped = top < static_cast<long>(n_) * (n_ - 1) / 2;

        for (long m = n_ - 1; m <= top; ++m) {
            LevelOutcome level = run_level(static_cast<int>(m));
            if (!level.witnesses.empty()) {
                res.value = m;
                res.lower_bound = m;
                std::sort(level.witnesses.begin(), level.witnesses.end());
                res.witnesses = std::move(level.witnesses);
                // In value mode the first witness settles the minimum even
                // though the rest of the level goes unexplored.
                res.exhaustive = mode_ == SearchMode::value || !level.timed_out;
                break;
            }
            if (level.timed_out) {
                res.lower_bound = m;  // levels below m are witness-free
                res.exhaustive = false;
                break;
            }
            res.lower_bound = m + 1;
        }
        if (!res.value && !timed_out_ && clipped) res.exhaustive = false;
        res.counters.graphs_enumerated = graphs_.load();
        res.counters.saturation_checks = checks_.load();
        res.counters.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return res;
    }

  private:
    bool out_of_time() {
        if (deadline_ && std::chrono::steady_clock::now() > *deadline_) {
            timed_out_ = true;
            return true;
        }
        return false;
    }

    bool prune(const Graph& g) { return find_forbidden_cycle(g, family_).has_value(); }

    // Visits one level-m class; appends the canonical string when saturated.
    // Returns false (ending the walk) in value mode once a witness is found.
    bool inspect(const Graph& g, std::vector<std::string>& sink) {
        graphs_.fetch_add(1, std::memory_order_relaxed);
        if (!g.is_connected()) return true;
        checks_.fetch_add(1, std::memory_order_relaxed);
        if (!check_saturated(g, family_).saturated()) return true;
        sink.push_back(canonical_form(g).g6);
        return mode_ != SearchMode::value;
    }

    LevelOutcome run_level(int m) {
        LevelOutcome out;
        timed_out_ = false;
        if (mode_ == SearchMode::full && budget_.jobs > 1 && m > kSplitLevel)
            run_level_parallel(m, out);
        else
            run_level_sequential(m, out);
        out.timed_out = timed_out_;
        return out;
    }

    void run_level_sequential(int m, LevelOutcome& out) {
        WalkHooks hooks;
        hooks.prune = [this](const Graph& g) { return prune(g); };
        hooks.stop = [this] { return out_of_time(); };
        hooks.visit = [this, &out](const Graph& g) { return inspect(g, out.witnesses); };
        walk_graphs(n_, m, hooks);
    }

    void run_level_parallel(int m, LevelOutcome& out) {
        std::vector<AugmentNode> roots;
        WalkHooks collect;
        collect.prune = [this](const Graph& g) { return prune(g); };
        collect.stop = [this] { return out_of_time(); };
        collect.visit = [&roots](const Graph& g) {
            roots.push_back({g, canonical_form(g).generators});
            return true;
        };
        walk_graphs(n_, kSplitLevel, collect);
        if (timed_out_) return;

        int workers = budget_.jobs;
        if (static_cast<std::size_t>(workers) > roots.size())
            workers = static_cast<int>(roots.size());
        if (workers < 1) workers = 1;
        std::atomic<std::size_t> next{0};
        std::mutex merge_mutex;
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, this] {
                std::vector<std::string> local;
                WalkHooks hooks;
                hooks.prune = [this](const Graph& g) { return prune(g); };
                hooks.stop = [this] { return out_of_time(); };
                hooks.visit = [this, &local](const Graph& g) { return inspect(g, local); };
                for (std::size_t i = next.fetch_add(1); i < roots.size(); i = next.fetch_add(1))
                    walk_graphs_from(roots[i], kSplitLevel, m, hooks);
                std::lock_guard<std::mutex> lock(merge_mutex);
                out.witnesses.insert(out.witnesses.end(), local.begin(), local.end());
            });
        }
        for (auto& t : pool) t.join();
    }

    static constexpr int kSplitLevel = 5;

    int n_;
    CycleFamily family_;
    SearchBudget budget_;
    SearchMode mode_;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    std::atomic<bool> timed_out_{false};
    std::atomic<long> graphs_{0}, checks_{0};
};

}  // namespace detail

inline SearchResult compute_sat(int n, const CycleFamily& family, SearchBudget budget = {},
                                SearchMode mode = SearchMode::value) {
    if (n < 1) throw std::invalid_argument("compute_sat: n must be >= 1");
    detail::SatSearch search(n, family, budget, mode);
    return search.run();
}

}  // namespace cyclesat
