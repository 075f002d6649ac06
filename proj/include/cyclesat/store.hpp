#pragma once

// JSON-lines result store. One record per line; appends are a single write
// so concurrent writers cannot interleave a record. Corrupt lines are skipped
// with a warning rather than poisoning the whole file.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cyclesat/version.hpp"

namespace cyclesat {

struct ResultRecord {
    std::string family_key;
    int n = 0;
    std::optional<long> value;  // absent when the search gave up early
    long lower_bound = 0;
    bool exhaustive = false;
    std::vector<std::string> witnesses;  // canonical graph6
    std::string tool_version;
    std::string timestamp;  // ISO 8601 UTC
    double wall_seconds = 0.0;
};

inline void to_json(nlohmann::json& j, const ResultRecord& r) {
    j = nlohmann::json{{"family", r.family_key},
                       {"n", r.n},
                       {"lower_bound", r.lower_bound},
                       {"exhaustive", r.exhaustive},
                       {"witnesses", r.witnesses},
                       {"tool_version", r.tool_version},
                       {"timestamp", r.timestamp},
                       {"wall_seconds", r.wall_seconds}};
    if (r.value)
        j["value"] = *r.value;
    else
        j["value"] = nullptr;
}

inline void from_json(const nlohmann::json& j, ResultRecord& r) {
    j.at("family").get_to(r.family_key);
    j.at("n").get_to(r.n);
    if (j.at("value").is_null())
        r.value.reset();
    else
        r.value = j.at("value").get<long>();
    j.at("lower_bound").get_to(r.lower_bound);
    j.at("exhaustive").get_to(r.exhaustive);
    j.at("witnesses").get_to(r.witnesses);
    j.at("tool_version").get_to(r.tool_version);
    j.at("timestamp").get_to(r.timestamp);
    j.at("wall_seconds").get_to(r.wall_seconds);
}

inline std::string utc_timestamp_now() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

class ResultStore {
  public:
    explicit ResultStore(std::string path) : path_(std::move(path)) {}

    const std::string& path() const { return path_; }

    void append(const ResultRecord& rec) {
        nlohmann::json j = rec;
        std::string line = j.dump();
        line.push_back('\n');
        std::ofstream out(path_, std::ios::app | std::ios::binary);
        if (!out) throw std::runtime_error("store: cannot open " + path_ + " for append");
        out.write(line.data(), static_cast<std::streamsize>(line.size()));
        if (!out) throw std::runtime_error("store: write to " + path_ + " failed");
    }

    /// Every parseable record, in file order. Corrupt lines are reported on
    /// stderr and skipped.
    std::vector<ResultRecord> all() const {
        std::vector<ResultRecord> out;
        std::ifstream in(path_, std::ios::binary);
        if (!in) return out;  // missing store reads as empty
        std::string line;
        long lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty()) continue;
            try {
                nlohmann::json j = nlohmann::json::parse(line);
                out.push_back(j.get<ResultRecord>());
            } catch (const std::exception& e) {
                std::cerr << "store: skipping corrupt line " << lineno << " of " << path_ << ": "
                          << e.what() << "\n";
            }
        }
        return out;
    }

    /// Newest exhaustive record for (family, n); if none is exhaustive, the
    /// newest record of any kind.
    std::optional<ResultRecord> query(const std::string& family_key, int n) const {
        std::optional<ResultRecord> best;
        for (const ResultRecord& rec : all()) {
            if (rec.family_key != family_key || rec.n != n) continue;
            if (!best) {
                best = rec;
                continue;
            }
            // File order is append order, so "not earlier" means newest wins.
            if (rec.exhaustive == best->exhaustive || rec.exhaustive) best = rec;
        }
        return best;
    }

  private:
    std::string path_;
};

/// Merge several stores into one, keeping a single record per (family, n):
/// exhaustive beats non-exhaustive, later input (and later line) beats earlier.
inline long store_merge(const std::vector<std::string>& inputs, const std::string& output) {
    std::map<std::pair<std::string, int>, ResultRecord> kept;
    std::vector<std::pair<std::string, int>> order;
    for (const std::string& path : inputs) {
        for (const ResultRecord& rec : ResultStore(path).all()) {
            auto key = std::make_pair(rec.family_key, rec.n);
            auto it = kept.find(key);
            if (it == kept.end()) {
                kept.emplace(key, rec);
                order.push_back(key);
            } else if (rec.exhaustive || !it->second.exhaustive) {
                it->second = rec;
            }
        }
    }
    std::ofstream out(output, std::ios::trunc | std::ios::binary);
    if (!out) throw std::runtime_error("store: cannot open " + output + " for write");
    for (const auto& key : order) {
        nlohmann::json j = kept.at(key);
        out << j.dump() << "\n";
    }
    if (!out) throw std::runtime_error("store: write to " + output + " failed");
    return static_cast<long>(order.size());
}

}  // namespace cyclesat
