#pragma once

#include "zerosum/catalog.hpp"
#include "zerosum/davenport.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace zerosum {

/// Outcome of one named verification suite. A failure is a mechanically
/// falsified claim on a concrete instance; skipped counts instances whose
/// hypotheses did not apply. Observations are reported measurements that
/// gate nothing.
struct SuiteReport {
    std::string suite;
    std::uint64_t instances = 0;
    std::uint64_t passes = 0;
    std::uint64_t skipped = 0;
    std::vector<std::string> failures;
    nlohmann::ordered_json observations = nlohmann::ordered_json::array();
    double elapsed_ms = 0.0;

    bool ok() const { return failures.empty(); }
    nlohmann::ordered_json to_json(bool with_timings) const;
};

struct VerifyOptions {
    std::uint64_t seed = 0;
    int jobs = 1;
    std::string findings_path = "./zerosum-findings.jsonl";
    bool log_findings = true;
    SearchLimits search;
};

/// The named suites, in canonical order: thm2, cor3, cor4, lemma6, prop7,
/// fact7, thm8, thm11, eq1, examples.
const std::vector<std::string>& suite_names();

/// Runs one suite; exact constants come from (and are stored into) the
/// catalog. Unknown names are rejected.
SuiteReport run_suite(const std::string& name, Catalog& catalog, const VerifyOptions& options);

}  // namespace zerosum
