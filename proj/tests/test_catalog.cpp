#include "zerosum/catalog.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace zerosum;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("/tmp/zerosum-test-" + name) {
        std::remove(path.c_str());
    }
    ~TempFile() {
        std::remove(path.c_str());
        std::remove((path + ".lock").c_str());
    }
};

CatalogEntry sample_entry() {
    CatalogEntry e;
    e.group_key = "C3xC3xC9";
    e.weight_key = "{-1,1}";
    e.davenport = 6;
    e.exact = true;
    e.witnesses = {"(0,0,1),(0,0,2),(0,0,4),(0,1,0),(1,0,0)"};
    e.extremal_census[6] = BigInt("123456789012345678901234567890");
    e.tool_version = kToolVersion;
    e.timestamp = "2026-08-11T00:00:00Z";
    return e;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

}  // namespace

TEST_CASE("put and get round-trip field for field") {
    Catalog c;
    const auto e = sample_entry();
    CHECK(c.put(e));
    const auto back = c.get("C3xC3xC9", "{-1,1}");
    REQUIRE(back.has_value());
    CHECK(back->group_key == e.group_key);
    CHECK(back->weight_key == e.weight_key);
    CHECK(back->davenport == 6);
    CHECK(back->exact);
    CHECK(back->witnesses == e.witnesses);
    CHECK(back->extremal_census == e.extremal_census);
    CHECK(back->tool_version == e.tool_version);
    CHECK(back->timestamp == e.timestamp);

    CHECK_FALSE(c.get("C5", "{-1,1}").has_value());
}

TEST_CASE("save and load are inverse and byte-stable") {
    TempFile f("catalog-roundtrip.json");
    Catalog c;
    c.put(sample_entry());
    CatalogEntry other;
    other.group_key = "C5";
    other.weight_key = "{1}";
    other.davenport = 5;
    other.exact = false;
    other.tool_version = kToolVersion;
    other.timestamp = "2026-08-11T00:00:01Z";
    c.put(other);
    c.save(f.path);
    const std::string first = slurp(f.path);

    const Catalog loaded = Catalog::load(f.path);
    CHECK(loaded.size() == 2);
    loaded.save(f.path);
    CHECK(slurp(f.path) == first);

    const auto big = loaded.get("C3xC3xC9", "{-1,1}");
    REQUIRE(big.has_value());
    CHECK(big->extremal_census.at(6) == BigInt("123456789012345678901234567890"));
}

TEST_CASE("missing and malformed files") {
    CHECK(Catalog::load("/tmp/zerosum-no-such-file.json").size() == 0);

    TempFile f("catalog-bad.json");
    std::ofstream(f.path) << "{ not json";
    CHECK_THROWS_WITH_AS(Catalog::load(f.path), doctest::Contains("malformed catalog"),
                         std::runtime_error);

    TempFile g("catalog-bad-schema.json");
    std::ofstream(g.path) << R"({"schema":"other/9","entries":[]})";
    CHECK_THROWS_AS(Catalog::load(g.path), std::runtime_error);
}

TEST_CASE("replacement policy") {
    Catalog c;
    CatalogEntry bound;
    bound.group_key = "C7";
    bound.weight_key = "{1}";
    bound.davenport = 5;
    bound.exact = false;
    CHECK(c.put(bound));

    // a shallower or equal lower bound does not replace
    CatalogEntry weaker = bound;
    weaker.davenport = 4;
    CHECK_FALSE(c.put(weaker));
    CHECK(c.get("C7", "{1}")->davenport == 5);

    // a deeper lower bound does
    CatalogEntry deeper = bound;
    deeper.davenport = 6;
    CHECK(c.put(deeper));
    CHECK(c.get("C7", "{1}")->davenport == 6);

    // exact beats any bound
    CatalogEntry exact = bound;
    exact.davenport = 7;
    exact.exact = true;
    CHECK(c.put(exact));
    CHECK(c.get("C7", "{1}")->exact);

    // a later bound never demotes an exact entry
    CatalogEntry late = bound;
    late.davenport = 9;
    CHECK_FALSE(c.put(late));
    CHECK(c.get("C7", "{1}")->davenport == 7);

    // census data merges into an exact entry without touching the value
    CatalogEntry census = exact;
    census.extremal_census[2] = 4;
    CHECK(c.put(census));
    CHECK(c.get("C7", "{1}")->extremal_census.at(2) == 4);
    CHECK(c.get("C7", "{1}")->davenport == 7);
}

TEST_CASE("census survives replacement") {
    Catalog c;
    CatalogEntry bound;
    bound.group_key = "C9";
    bound.weight_key = "{-1,1}";
    bound.davenport = 3;
    bound.exact = false;
    bound.extremal_census[2] = 12;
    CHECK(c.put(bound));
    CatalogEntry exact = bound;
    exact.davenport = 4;
    exact.exact = true;
    exact.extremal_census.clear();
    CHECK(c.put(exact));
    CHECK(c.get("C9", "{-1,1}")->extremal_census.at(2) == 12);
}

TEST_CASE("pruning lower bounds") {
    Catalog c;
    c.put(sample_entry());
    CatalogEntry bound;
    bound.group_key = "C7";
    bound.weight_key = "{1}";
    bound.davenport = 5;
    bound.exact = false;
    c.put(bound);
    CHECK(c.prune_inexact() == 1);
    CHECK(c.size() == 1);
    CHECK(c.get("C3xC3xC9", "{-1,1}").has_value());
}

TEST_CASE("compute-or-cache") {
    Catalog c;
    const auto G = FiniteAbelianGroup::parse("C5");
    const auto A = WeightSet::parse("pm1", G);
    bool from_cache = true;
    CHECK(get_or_compute_davenport(c, G, A, SearchLimits{}, &from_cache) == 3);
    CHECK_FALSE(from_cache);
    CHECK(get_or_compute_davenport(c, G, A, SearchLimits{}, &from_cache) == 3);
    CHECK(from_cache);
    const auto entry = c.get(G, A);
    REQUIRE(entry.has_value());
    CHECK(entry->exact);
    CHECK_FALSE(entry->witnesses.empty());
    CHECK(entry->tool_version == kToolVersion);
}

TEST_CASE("advisory lock is reentrant across scopes") {
    TempFile f("catalog-lock.json");
    {
        FileLock lock(f.path);
        Catalog c;
        c.put(sample_entry());
        c.save(f.path);
    }
    {
        FileLock lock(f.path);
        CHECK(Catalog::load(f.path).size() == 1);
    }
}
