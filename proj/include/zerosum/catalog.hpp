#pragma once

#include "zerosum/davenport.hpp"
#include "zerosum/group.hpp"
#include "zerosum/util.hpp"
#include "zerosum/weights.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace zerosum {

/// One computed result, keyed by canonical group and weight strings.
/// Entries with exact = false are lower bounds only; theorem suites never
/// rely on them.
struct CatalogEntry {
    std::string group_key;
    std::string weight_key;
    int davenport = 0;
    bool exact = false;
    std::vector<std::string> witnesses;           // sequence literals, canonical order
    std::map<int, BigInt> extremal_census;        // length -> number of extremal sequences
    std::string tool_version;
    std::string timestamp;  // ISO-8601 UTC, set when the entry is created
};

/// Persistent store of search results as a single human-readable JSON
/// file with sorted keys, written atomically (temp file + rename).
class Catalog {
public:
    /// A missing file yields an empty catalog; a malformed one fails with
    /// a diagnostic instead of being silently truncated.
    static Catalog load(const std::string& path);
    void save(const std::string& path) const;

    std::optional<CatalogEntry> get(const FiniteAbelianGroup& G, const WeightSet& A) const;
    std::optional<CatalogEntry> get(const std::string& group_key,
                                    const std::string& weight_key) const;

    /// Stores the entry unless an existing one is better: a new entry wins
    /// when it is exact and the old is not, or when both are inexact and
    /// the new bound is deeper. Census data from the old entry is carried
    /// forward when the new entry lacks it. Returns whether it was stored.
    bool put(CatalogEntry entry);

    /// Drops entries that are only lower bounds. Returns how many.
    int prune_inexact();

    std::size_t size() const { return entries_.size(); }
    const std::map<std::pair<std::string, std::string>, CatalogEntry>& entries() const {
        return entries_;
    }

private:
    std::map<std::pair<std::string, std::string>, CatalogEntry> entries_;
};

/// Advisory exclusive lock on <path>.lock held for the object's lifetime;
/// concurrent CLI invocations serialize their load-modify-save cycles on it.
class FileLock {
public:
    explicit FileLock(const std::string& path);
    ~FileLock();
    FileLock(const FileLock&) = delete;
    FileLock& operator=(const FileLock&) = delete;

private:
    int fd_ = -1;
};

/// Default catalog location: $ZEROSUM_CATALOG or ./zerosum-catalog.json.
std::string default_catalog_path();

/// Returns the exact constant from the catalog, or searches and stores it.
int get_or_compute_davenport(Catalog& catalog, const FiniteAbelianGroup& G, const WeightSet& A,
                             const SearchLimits& limits = {}, bool* from_cache = nullptr);

std::string current_timestamp_utc();

extern const char* const kToolVersion;

}  // namespace zerosum
