#include "zerosum/catalog.hpp"
#include "zerosum/counting.hpp"
#include "zerosum/davenport.hpp"
#include "zerosum/extremal.hpp"
#include "zerosum/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

using json = nlohmann::ordered_json;
using namespace zerosum;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitSuiteFailure = 2;
constexpr int kExitBudget = 3;

struct GlobalOptions {
    std::string catalog_path = default_catalog_path();
    bool csv = false;
    bool timings = false;
    std::uint64_t seed = 0;
    int jobs = 1;
    std::string findings_path = "./zerosum-findings.jsonl";
    bool no_findings = false;
};

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void emit_csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    for (std::size_t i = 0; i < header.size(); ++i)
        std::cout << (i ? "," : "") << csv_escape(header[i]);
    std::cout << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            std::cout << (i ? "," : "") << csv_escape(row[i]);
        std::cout << '\n';
    }
}

json witnesses_json(const DavenportResult& r) {
    json w = json::array();
    for (const auto& s : r.witnesses) w.push_back(s.to_literal());
    return w;
}

int cmd_group(const GlobalOptions& opt, const std::string& group_spec, bool enumerate) {
    const auto G = FiniteAbelianGroup::parse(group_spec);
    if (opt.csv) {
        if (enumerate) {
            std::vector<std::vector<std::string>> rows;
            for (const auto& g : G.elements())
                rows.push_back({G.format_element(g), std::to_string(G.index_of(g)),
                                std::to_string(G.order_of(g))});
            emit_csv({"element", "index", "order"}, rows);
        } else {
            emit_csv({"group", "order", "exponent", "rank"},
                     {{G.canonical_name(), std::to_string(G.order()), std::to_string(G.exponent()),
                       std::to_string(G.rank())}});
        }
        return kExitOk;
    }
    json j;
    j["command"] = "group";
    j["group"] = G.canonical_name();
    j["order"] = G.order();
    j["exponent"] = G.exponent();
    j["rank"] = G.rank();
    j["invariant_factors"] = G.invariant_factors();
    if (enumerate) {
        json elements = json::array();
        for (const auto& g : G.elements())
            elements.push_back(json{{"element", G.format_element(g)},
                                    {"index", G.index_of(g)},
                                    {"order", G.order_of(g)}});
        j["elements"] = elements;
    }
    emit(j);
    return kExitOk;
}

int cmd_count(const GlobalOptions& opt, const std::string& group_spec,
              const std::string& weight_spec, const std::string& seq_literal, bool oracle,
              int max_length, std::size_t max_states) {
    const auto G = FiniteAbelianGroup::parse(group_spec);
    const auto A = WeightSet::parse(weight_spec, G);
    const auto S = Sequence::parse(G, seq_literal);
    CountLimits limits;
    limits.max_length = max_length;
    limits.max_states = max_states;
    const CountVector cv = oracle ? brute_force_count_vector(S, A) : count_vector(S, A, limits);
    const SumSupport support = sum_support(S, A);

    if (opt.csv) {
        std::vector<std::vector<std::string>> rows;
        for (ElementIndex g = 0; g < G.order(); ++g)
            rows.push_back({G.format_element(G.element_at(g)), cv.at(g).str()});
        emit_csv({"element", "count"}, rows);
        return kExitOk;
    }
    json counts = json::object();
    for (ElementIndex g = 0; g < G.order(); ++g)
        counts[G.format_element(G.element_at(g))] = cv.at(g).str();
    json sigma = json::array();
    support.sigma_a.for_each(
        [&](ElementIndex g) { sigma.push_back(G.format_element(G.element_at(g))); });
    json j;
    j["command"] = "count";
    j["group"] = G.canonical_name();
    j["weights"] = A.canonical_name();
    j["sequence"] = S.to_literal();
    j["length"] = S.length();
    j["counts"] = counts;
    j["sigma_A"] = sigma;
    j["zero_sum_free"] = is_zero_sum_free(S, A);
    j["oracle"] = oracle;
    emit(j);
    return kExitOk;
}

int cmd_davenport(const GlobalOptions& opt, const std::string& group_spec,
                  const std::string& weight_spec, std::uint64_t budget, bool verify,
                  bool recompute, std::size_t max_witnesses) {
    const auto G = FiniteAbelianGroup::parse(group_spec);
    const auto A = WeightSet::parse(weight_spec, G);
    SearchLimits limits;
    limits.node_budget = budget;
    limits.max_witnesses = max_witnesses;

    FileLock lock(opt.catalog_path);
    Catalog catalog = Catalog::load(opt.catalog_path);

    json j;
    j["command"] = "davenport";
    j["group"] = G.canonical_name();
    j["weights"] = A.canonical_name();

    bool exact = true;
    int value = 0;
    if (const auto entry = catalog.get(G, A); entry && entry->exact && !recompute) {
        value = entry->davenport;
        j["davenport"] = value;
        j["exact"] = true;
        j["max_zsf_length"] = value - 1;
        j["witnesses"] = entry->witnesses;
        j["cached"] = true;
    } else {
        const DavenportResult r = max_zero_sum_free(G, A, limits);
        value = r.value;
        exact = r.exact;
        j["davenport"] = r.value;
        j["exact"] = r.exact;
        j["max_zsf_length"] = r.max_zsf_length;
        j["witnesses"] = witnesses_json(r);
        j["witness_count"] = r.witness_count;
        j["nodes_explored"] = r.nodes_explored;
        j["budget"] = budget;
        j["halved"] = r.halved;
        j["cached"] = false;
        if (opt.timings) j["elapsed_ms"] = r.elapsed_ms;

        CatalogEntry fresh;
        fresh.group_key = G.canonical_name();
        fresh.weight_key = A.canonical_name();
        fresh.davenport = r.value;
        fresh.exact = r.exact;
        for (std::size_t i = 0; i < r.witnesses.size() && i < 4; ++i)
            fresh.witnesses.push_back(r.witnesses[i].to_literal());
        fresh.tool_version = kToolVersion;
        fresh.timestamp = current_timestamp_utc();
        catalog.put(std::move(fresh));
        catalog.save(opt.catalog_path);
    }

    if (verify && exact) {
        SearchLimits vlimits = limits;
        const auto result = verify_every_length_d_has_zero_sum(G, A, value, vlimits);
        json vj;
        vj["status"] = result.status == VerifyStatus::verified   ? "verified"
                       : result.status == VerifyStatus::refuted ? "refuted"
                                                                : "skipped";
        vj["sequences_checked"] = result.sequences_checked;
        if (result.counterexample) vj["counterexample"] = result.counterexample->to_literal();
        j["verify"] = vj;
        if (result.status == VerifyStatus::refuted) {
            emit(j);
            return kExitSuiteFailure;  // the search and the sweep disagree
        }
    }

    if (opt.csv)
        emit_csv({"group", "weights", "davenport", "exact"},
                 {{G.canonical_name(), A.canonical_name(), std::to_string(value),
                   exact ? "true" : "false"}});
    else
        emit(j);
    return exact ? kExitOk : kExitBudget;
}

int cmd_zsf(const GlobalOptions& opt, const std::string& group_spec,
            const std::string& weight_spec, std::uint64_t budget, std::size_t max_witnesses) {
    const auto G = FiniteAbelianGroup::parse(group_spec);
    const auto A = WeightSet::parse(weight_spec, G);
    SearchLimits limits;
    limits.node_budget = budget;
    limits.max_witnesses = max_witnesses;
    const DavenportResult r = max_zero_sum_free(G, A, limits);
    if (opt.csv) {
        std::vector<std::vector<std::string>> rows;
        for (const auto& w : r.witnesses) rows.push_back({w.to_literal()});
        emit_csv({"witness"}, rows);
    } else {
        json j;
        j["command"] = "zsf";
        j["group"] = G.canonical_name();
        j["weights"] = A.canonical_name();
        j["max_zsf_length"] = r.max_zsf_length;
        j["exact"] = r.exact;
        j["witnesses"] = witnesses_json(r);
        j["witness_count"] = r.witness_count;
        j["nodes_explored"] = r.nodes_explored;
        if (opt.timings) j["elapsed_ms"] = r.elapsed_ms;
        emit(j);
    }
    return r.exact ? kExitOk : kExitBudget;
}

int cmd_extremal(const GlobalOptions& opt, const std::string& group_spec,
                 const std::string& weight_spec, int min_length, int max_length,
                 std::uint64_t budget, std::size_t list_limit) {
    const auto G = FiniteAbelianGroup::parse(group_spec);
    const auto A = WeightSet::parse(weight_spec, G);

    FileLock lock(opt.catalog_path);
    Catalog catalog = Catalog::load(opt.catalog_path);
    const int D = get_or_compute_davenport(catalog, G, A);

    if (min_length < 0) min_length = D - 1;
    if (max_length < 0) max_length = D;
    if (min_length < D - 1)
        throw std::invalid_argument("extremal lengths start at D-1 = " + std::to_string(D - 1));

    EnumerateLimits limits;
    limits.budget = budget;
    bool all_complete = true;
    json lengths = json::array();
    CatalogEntry census_update;
    census_update.group_key = G.canonical_name();
    census_update.weight_key = A.canonical_name();
    census_update.davenport = D;
    census_update.exact = true;
    census_update.tool_version = kToolVersion;
    census_update.timestamp = current_timestamp_utc();

    std::vector<std::vector<std::string>> rows;
    for (int len = min_length; len <= max_length; ++len) {
        const auto en = enumerate_extremal(G, A, D, len, limits);
        all_complete = all_complete && en.complete;
        json lj;
        lj["length"] = len;
        lj["threshold"] = extremal_threshold(len, D).str();
        lj["count"] = en.sequences.size();
        lj["complete"] = en.complete;
        json list = json::array();
        for (std::size_t i = 0; i < en.sequences.size() && i < list_limit; ++i)
            list.push_back(en.sequences[i].to_literal());
        lj["sequences"] = list;

        // multiplicity-profile and sum-support census of the members
        std::uint64_t squarefree = 0, one_double = 0, other_profile = 0, full_support = 0;
        for (const auto& S : en.sequences) {
            int doubled = 0, higher = 0;
            for (const auto& [elem, mult] : S.multiplicities()) {
                if (mult == 2) ++doubled;
                if (mult > 2) ++higher;
            }
            if (doubled == 0 && higher == 0) ++squarefree;
            else if (doubled == 1 && higher == 0) ++one_double;
            else ++other_profile;
            if (sum_support(S, A).sigma_a_bullet.count() == G.order()) ++full_support;
        }
        lj["analysis"] = json{{"squarefree", squarefree},
                              {"one_double", one_double},
                              {"other_profile", other_profile},
                              {"full_support", full_support}};
        lengths.push_back(lj);
        rows.push_back({std::to_string(len), extremal_threshold(len, D).str(),
                        std::to_string(en.sequences.size()), en.complete ? "true" : "false"});
        if (en.complete) census_update.extremal_census[len] = en.sequences.size();
    }
    catalog.put(std::move(census_update));
    catalog.save(opt.catalog_path);

    if (opt.csv) {
        emit_csv({"length", "threshold", "count", "complete"}, rows);
    } else {
        json j;
        j["command"] = "extremal";
        j["group"] = G.canonical_name();
        j["weights"] = A.canonical_name();
        j["davenport"] = D;
        j["lengths"] = lengths;
        emit(j);
    }
    return all_complete ? kExitOk : kExitBudget;
}

int cmd_structure_check(const GlobalOptions& opt, const std::string& group_spec,
                        const std::string& weight_spec, const std::string& seq_literal) {
    const auto G = FiniteAbelianGroup::parse(group_spec);
    const auto A = WeightSet::parse(weight_spec, G);
    const auto S = Sequence::parse(G, seq_literal);
    const int p = G.exponent();
    const int r = G.rank();

    FileLock lock(opt.catalog_path);
    Catalog catalog = Catalog::load(opt.catalog_path);
    const int D = get_or_compute_davenport(catalog, G, A);
    catalog.save(opt.catalog_path);

    const CountVector cv = count_vector(S, A);
    const bool extremal =
        S.length() >= D - 1 && cv.at(0) == extremal_threshold(S.length(), D);
    const auto decomposition = decompose_theorem11(S, p, r);

    json j;
    j["command"] = "structure-check";
    j["group"] = G.canonical_name();
    j["weights"] = A.canonical_name();
    j["sequence"] = S.to_literal();
    j["davenport"] = D;
    j["n0"] = cv.at(0).str();
    if (S.length() >= D - 1) j["threshold"] = extremal_threshold(S.length(), D).str();
    j["extremal"] = extremal;
    if (decomposition) {
        json basis = json::array();
        for (const auto& b : decomposition->basis) basis.push_back(G.format_element(b));
        json extras = json::array();
        for (const auto& extra : decomposition->extras) {
            json support = json::array(), coefficients = json::array();
            for (int i : extra.support) support.push_back(i + 1);  // 1-based positions
            for (int c : extra.coefficients) coefficients.push_back(c);
            extras.push_back(json{{"term", G.format_element(extra.term)},
                                  {"support", support},
                                  {"coefficients", coefficients}});
        }
        j["decomposition"] = json{{"basis", basis}, {"extras", extras}};
    } else {
        j["decomposition"] = nullptr;
    }
    const bool violation = extremal && !decomposition;
    j["ok"] = !violation;

    if (opt.csv)
        emit_csv({"sequence", "extremal", "decomposed", "ok"},
                 {{S.to_literal(), extremal ? "true" : "false",
                   decomposition ? "true" : "false", violation ? "false" : "true"}});
    else
        emit(j);
    return violation ? kExitSuiteFailure : kExitOk;
}

int cmd_verify(const GlobalOptions& opt, const std::vector<std::string>& names,
               std::uint64_t budget) {
    std::vector<std::string> selected;
    for (const auto& name : names) {
        if (name == "all") {
            selected = suite_names();
            break;
        }
        selected.push_back(name);
    }
    if (selected.empty()) selected = suite_names();

    VerifyOptions options;
    options.seed = opt.seed;
    options.jobs = opt.jobs;
    options.findings_path = opt.findings_path;
    options.log_findings = !opt.no_findings;
    options.search.node_budget = budget;

    FileLock lock(opt.catalog_path);
    Catalog catalog = Catalog::load(opt.catalog_path);

    bool ok = true;
    json suites = json::array();
    std::vector<std::vector<std::string>> rows;
    for (const auto& name : selected) {
        const SuiteReport report = run_suite(name, catalog, options);
        ok = ok && report.ok();
        suites.push_back(report.to_json(opt.timings));
        rows.push_back({report.suite, std::to_string(report.instances),
                        std::to_string(report.passes), std::to_string(report.failures.size()),
                        std::to_string(report.skipped)});
    }
    catalog.save(opt.catalog_path);

    if (opt.csv) {
        emit_csv({"suite", "instances", "passes", "failures", "skipped"}, rows);
    } else {
        json j;
        j["command"] = "verify";
        j["seed"] = opt.seed;
        j["suites"] = suites;
        j["ok"] = ok;
        emit(j);
    }
    return ok ? kExitOk : kExitSuiteFailure;
}

int cmd_catalog(const GlobalOptions& opt, const std::string& action) {
    FileLock lock(opt.catalog_path);
    Catalog catalog = Catalog::load(opt.catalog_path);
    if (action == "show") {
        if (opt.csv) {
            std::vector<std::vector<std::string>> rows;
            for (const auto& [key, e] : catalog.entries())
                rows.push_back({e.group_key, e.weight_key, std::to_string(e.davenport),
                                e.exact ? "true" : "false", e.timestamp});
            emit_csv({"group", "weights", "davenport", "exact", "timestamp"}, rows);
            return kExitOk;
        }
        json entries = json::array();
        for (const auto& [key, e] : catalog.entries()) {
            json ej;
            ej["group"] = e.group_key;
            ej["weights"] = e.weight_key;
            ej["davenport"] = e.davenport;
            ej["exact"] = e.exact;
            ej["witnesses"] = e.witnesses;
            if (!e.extremal_census.empty()) {
                json census = json::object();
                for (const auto& [len, count] : e.extremal_census)
                    census[std::to_string(len)] = count.str();
                ej["extremal_census"] = census;
            }
            ej["tool_version"] = e.tool_version;
            ej["timestamp"] = e.timestamp;
            entries.push_back(ej);
        }
        json j;
        j["command"] = "catalog";
        j["action"] = "show";
        j["path"] = opt.catalog_path;
        j["entries"] = entries;
        emit(j);
        return kExitOk;
    }
    if (action == "prune") {
        const int removed = catalog.prune_inexact();
        catalog.save(opt.catalog_path);
        json j;
        j["command"] = "catalog";
        j["action"] = "prune";
        j["removed"] = removed;
        j["remaining"] = catalog.size();
        emit(j);
        return kExitOk;
    }
    throw std::invalid_argument("unknown catalog action '" + action + "': expected show or prune");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact weighted zero-sum counting, Davenport-constant search, and extremal "
                 "sequence analysis over finite abelian groups"};
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_option("--catalog", global.catalog_path, "Catalog file (also $ZEROSUM_CATALOG)")
        ->capture_default_str();
    bool json_flag = false;
    auto* json_opt = app.add_flag("--json", json_flag, "Emit JSON (default)");
    app.add_flag("--csv", global.csv, "Emit CSV instead of JSON")->excludes(json_opt);
    app.add_flag("--timings", global.timings, "Include wall-clock fields in JSON output");
    app.add_option("--seed", global.seed, "Seed for randomized suites")->capture_default_str();
    app.add_option("--jobs", global.jobs, "Worker threads for suite sweeps")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--findings", global.findings_path, "Findings log for reported observations")
        ->capture_default_str();
    app.add_flag("--no-findings", global.no_findings, "Do not write the findings log");
    app.fallthrough();

    std::string group_spec, weight_spec, seq_literal;
    std::uint64_t budget = SearchLimits{}.node_budget;

    auto* group_cmd = app.add_subcommand("group", "Group info and element enumeration");
    bool enumerate = false;
    group_cmd->add_option("--group", group_spec, "Group spec, e.g. C3^2xC9")->required();
    group_cmd->add_flag("--enumerate", enumerate, "List all elements");

    auto* count_cmd = app.add_subcommand("count", "Exact weighted subsequence counts");
    bool oracle = false;
    int dp_max_length = CountLimits{}.max_length;
    std::size_t dp_max_states = CountLimits{}.max_states;
    count_cmd->add_option("--group", group_spec, "Group spec")->required();
    count_cmd->add_option("--weights", weight_spec, "Weight spec: {a,b,...} | unit | pm1 | full")
        ->required();
    count_cmd->add_option("--seq", seq_literal, "Sequence literal, e.g. \"(1,0)*2,(0,1)\"")
        ->required();
    count_cmd->add_flag("--oracle", oracle, "Use the exhaustive 2^|S| oracle");
    count_cmd->add_option("--max-length", dp_max_length, "Dynamic-program length cap")
        ->capture_default_str();
    count_cmd->add_option("--max-states", dp_max_states, "Dynamic-program state ceiling")
        ->capture_default_str();

    auto* dav_cmd = app.add_subcommand("davenport", "Weighted Davenport constant by search");
    bool dav_verify = false, dav_recompute = false;
    std::size_t max_witnesses = SearchLimits{}.max_witnesses;
    dav_cmd->add_option("--group", group_spec, "Group spec")->required();
    dav_cmd->add_option("--weights", weight_spec, "Weight spec")->required();
    dav_cmd->add_option("--budget", budget, "Search node budget")->capture_default_str();
    dav_cmd->add_flag("--verify", dav_verify, "Exhaustively confirm no longer zero-sum-free sequence");
    dav_cmd->add_flag("--recompute", dav_recompute, "Ignore a cached catalog entry");
    dav_cmd->add_option("--max-witnesses", max_witnesses, "Witnesses to keep")->capture_default_str();

    auto* zsf_cmd = app.add_subcommand("zsf", "Longest zero-sum-free sequences");
    zsf_cmd->add_option("--group", group_spec, "Group spec")->required();
    zsf_cmd->add_option("--weights", weight_spec, "Weight spec")->required();
    zsf_cmd->add_option("--budget", budget, "Search node budget")->capture_default_str();
    zsf_cmd->add_option("--max-witnesses", max_witnesses, "Witnesses to keep")->capture_default_str();

    auto* ext_cmd = app.add_subcommand("extremal", "Enumerate sequences meeting the count floor");
    int min_length = -1, max_length = -1;
    std::uint64_t enum_budget = EnumerateLimits{}.budget;
    std::size_t list_limit = 16;
    ext_cmd->add_option("--group", group_spec, "Group spec")->required();
    ext_cmd->add_option("--weights", weight_spec, "Weight spec")->required();
    ext_cmd->add_option("--min-length", min_length, "First length (default D-1)");
    ext_cmd->add_option("--max-length", max_length, "Last length (default D)");
    ext_cmd->add_option("--budget", enum_budget, "Enumeration budget")->capture_default_str();
    ext_cmd->add_option("--list-limit", list_limit, "Sequences listed per length")
        ->capture_default_str();

    auto* struct_cmd = app.add_subcommand("structure-check",
                                          "Basis-plus-extras decomposition over C_p^r");
    struct_cmd->add_option("--group", group_spec, "Group spec (must be C_p^r)")->required();
    struct_cmd->add_option("--weights", weight_spec, "Weight spec (full)")->required();
    struct_cmd->add_option("--seq", seq_literal, "Sequence literal")->required();

    auto* verify_cmd = app.add_subcommand("verify", "Run named verification suites");
    std::vector<std::string> suite_args;
    verify_cmd->add_option("suites", suite_args, "Suite names or 'all'");
    verify_cmd->add_option("--budget", budget, "Search node budget")->capture_default_str();

    auto* catalog_cmd = app.add_subcommand("catalog", "Inspect or prune the result catalog");
    std::string catalog_action = "show";
    catalog_cmd->add_option("action", catalog_action, "show | prune");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (group_cmd->parsed()) return cmd_group(global, group_spec, enumerate);
        if (count_cmd->parsed())
            return cmd_count(global, group_spec, weight_spec, seq_literal, oracle, dp_max_length,
                             dp_max_states);
        if (dav_cmd->parsed())
            return cmd_davenport(global, group_spec, weight_spec, budget, dav_verify,
                                 dav_recompute, max_witnesses);
        if (zsf_cmd->parsed())
            return cmd_zsf(global, group_spec, weight_spec, budget, max_witnesses);
        if (ext_cmd->parsed())
            return cmd_extremal(global, group_spec, weight_spec, min_length, max_length,
                                enum_budget, list_limit);
        if (struct_cmd->parsed())
            return cmd_structure_check(global, group_spec, weight_spec, seq_literal);
        if (verify_cmd->parsed()) return cmd_verify(global, suite_args, budget);
        if (catalog_cmd->parsed()) return cmd_catalog(global, catalog_action);
    } catch (const BudgetError& e) {
        std::cerr << "budget exhausted: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
