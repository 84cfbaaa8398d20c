#include "zerosum/catalog.hpp"

#include <nlohmann/json.hpp>

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>

namespace zerosum {

const char* const kToolVersion = "0.1.0";

namespace {

constexpr const char* kSchema = "zerosum-catalog/1";

using json = nlohmann::ordered_json;

json entry_to_json(const CatalogEntry& e) {
    json j;
    j["group"] = e.group_key;
    j["weights"] = e.weight_key;
    j["davenport"] = e.davenport;
    j["exact"] = e.exact;
    j["witnesses"] = e.witnesses;
    if (!e.extremal_census.empty()) {
        json census = json::object();
        for (const auto& [length, count] : e.extremal_census)
            census[std::to_string(length)] = count.str();
        j["extremal_census"] = census;
    }
    j["tool_version"] = e.tool_version;
    j["timestamp"] = e.timestamp;
    return j;
}

CatalogEntry entry_from_json(const json& j) {
    CatalogEntry e;
    e.group_key = j.at("group").get<std::string>();
    e.weight_key = j.at("weights").get<std::string>();
    e.davenport = j.at("davenport").get<int>();
    e.exact = j.at("exact").get<bool>();
    for (const auto& w : j.at("witnesses")) e.witnesses.push_back(w.get<std::string>());
    if (j.contains("extremal_census"))
        for (const auto& [key, value] : j.at("extremal_census").items())
            e.extremal_census[std::stoi(key)] = BigInt(value.get<std::string>());
    e.tool_version = j.value("tool_version", "");
    e.timestamp = j.value("timestamp", "");
    return e;
}

}  // namespace

Catalog Catalog::load(const std::string& path) {
    Catalog catalog;
    std::ifstream in(path);
    if (!in.good()) return catalog;  // missing file -> empty catalog
    json j;
    try {
        in >> j;
        if (j.at("schema").get<std::string>() != kSchema)
            throw std::runtime_error("unsupported schema '" +
                                     j.at("schema").get<std::string>() + "'");
        for (const auto& item : j.at("entries")) {
            CatalogEntry e = entry_from_json(item);
            auto key = std::make_pair(e.group_key, e.weight_key);
            catalog.entries_.emplace(std::move(key), std::move(e));
        }
    } catch (const std::exception& ex) {
        throw std::runtime_error("malformed catalog file '" + path + "': " + ex.what());
    }
    return catalog;
}

void Catalog::save(const std::string& path) const {
    json j;
    j["schema"] = kSchema;
    json entries = json::array();
    for (const auto& [key, entry] : entries_) entries.push_back(entry_to_json(entry));
    j["entries"] = entries;

    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out.good()) throw std::runtime_error("cannot write catalog temp file '" + tmp + "'");
        out << j.dump(2) << '\n';
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot rename '" + tmp + "' to '" + path + "'");
}

std::optional<CatalogEntry> Catalog::get(const std::string& group_key,
                                         const std::string& weight_key) const {
    auto it = entries_.find({group_key, weight_key});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

std::optional<CatalogEntry> Catalog::get(const FiniteAbelianGroup& G, const WeightSet& A) const {
    return get(G.canonical_name(), A.canonical_name());
}

bool Catalog::put(CatalogEntry entry) {
    auto key = std::make_pair(entry.group_key, entry.weight_key);
    auto it = entries_.find(key);
    if (it != entries_.end()) {
        CatalogEntry& old = it->second;
        if (old.exact && !entry.exact) return false;
        if (old.exact && entry.exact) {
            // value already settled; only new census data can change the entry
            bool changed = false;
            for (const auto& [length, count] : entry.extremal_census) {
                changed = true;
                old.extremal_census[length] = count;
            }
            return changed;
        }
        if (!entry.exact && entry.davenport <= old.davenport) return false;
        if (entry.extremal_census.empty()) entry.extremal_census = old.extremal_census;
    }
    entries_[key] = std::move(entry);
    return true;
}

int Catalog::prune_inexact() {
    int removed = 0;
    for (auto it = entries_.begin(); it != entries_.end();) {
        if (!it->second.exact) {
            it = entries_.erase(it);
            ++removed;
        } else {
            ++it;
        }
    }
    return removed;
}

FileLock::FileLock(const std::string& path) {
    const std::string lock_path = path + ".lock";
    fd_ = ::open(lock_path.c_str(), O_CREAT | O_RDWR, 0644);
    if (fd_ >= 0) ::flock(fd_, LOCK_EX);
}

FileLock::~FileLock() {
    if (fd_ >= 0) {
        ::flock(fd_, LOCK_UN);
        ::close(fd_);
    }
}

std::string default_catalog_path() {
    if (const char* env = std::getenv("ZEROSUM_CATALOG"); env && *env) return env;
    return "./zerosum-catalog.json";
}

std::string current_timestamp_utc() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

int get_or_compute_davenport(Catalog& catalog, const FiniteAbelianGroup& G, const WeightSet& A,
                             const SearchLimits& limits, bool* from_cache) {
    if (auto entry = catalog.get(G, A); entry && entry->exact) {
        if (from_cache) *from_cache = true;
        return entry->davenport;
    }
    if (from_cache) *from_cache = false;
    const DavenportResult result = max_zero_sum_free(G, A, limits);
    if (!result.exact)
        throw BudgetError("search for " + G.canonical_name() + " with " + A.canonical_name() +
                          " did not finish within its node budget");
    CatalogEntry entry;
    entry.group_key = G.canonical_name();
    entry.weight_key = A.canonical_name();
    entry.davenport = result.value;
    entry.exact = true;
    for (std::size_t i = 0; i < result.witnesses.size() && i < 4; ++i)
        entry.witnesses.push_back(result.witnesses[i].to_literal());
    entry.tool_version = kToolVersion;
    entry.timestamp = current_timestamp_utc();
    catalog.put(std::move(entry));
    return result.value;
}

}  // namespace zerosum
