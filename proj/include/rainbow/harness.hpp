#pragma once

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "rainbow/binomial.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/hypergraph.hpp"
#include "rainbow/prng.hpp"
#include "rainbow/proof_engine.hpp"
#include "rainbow/solver.hpp"

namespace rainbow {

// ============================================================================
// batch experiments: threshold sweeps, tightness, the complement pair
// ============================================================================

enum class EngineKind { Solver, Proof, Both };

inline auto to_string(EngineKind e) -> const char *
{
    switch (e) {
    case EngineKind::Solver: return "solver";
    case EngineKind::Proof: return "proof-engine";
    case EngineKind::Both: return "both";
    }
    return "?";
}

inline auto engine_from_string(const std::string & name) -> EngineKind
{
    if (name == "solver")
        return EngineKind::Solver;
    if (name == "proof-engine")
        return EngineKind::Proof;
    if (name == "both")
        return EngineKind::Both;
    throw InputError("unknown engine '" + name + "' (expected solver, proof-engine, or both)");
}

inline auto coloring_mode_from_string(const std::string & name) -> ColoringMode
{
    if (name == "rainbow")
        return ColoringMode::Rainbow;
    if (name == "greedy_proper")
        return ColoringMode::GreedyProper;
    throw InputError("unknown coloring_mode '" + name + "' (expected rainbow or greedy_proper)");
}

struct GridPoint {
    int n = 0, k = 0, s = 0;
};

struct SweepConfig {
    std::vector<GridPoint> grid;
    int trials = 1;
    std::optional<Count> edges;                        // per member; default threshold(n,k,s)+1 per point
    ColoringMode coloring_mode = ColoringMode::Rainbow;
    std::uint64_t seed = 0;
    EngineKind engine = EngineKind::Both;
};

struct SweepRecord {
    int n = 0, k = 0, s = 0;
    std::uint64_t seed = 0; // per-trial seed, enough to replay the family
    EngineKind engine = EngineKind::Solver;
    Count edges = 0;
    ColoringMode coloring_mode = ColoringMode::Rainbow;
    bool exploratory = false; // edge count at or below the threshold
    bool found = false;
    bool valid = false; // witness passed the independent checker
    std::string note;   // engine diagnostic when something was thrown
    double elapsed_ms = 0.0;
};

struct SweepReport {
    SweepConfig config;
    std::vector<SweepRecord> records;
};

inline auto point_edges(const SweepConfig & config, const GridPoint & g) -> Count
{
    return config.edges ? *config.edges : threshold(g.n, g.k, g.s) + 1;
}

inline auto validate_config(const SweepConfig & config) -> void
{
    if (config.grid.empty())
        throw InputError("sweep config: grid must not be empty");
    if (config.trials < 1)
        throw InputError("sweep config: trials must be at least 1");
    for (const auto & g : config.grid) {
        if (g.k < 1 || g.s < 1 || g.k > g.n)
            throw InputError("sweep config: grid point needs 1 <= k <= n and s >= 1, got (" + std::to_string(g.n) +
                             ", " + std::to_string(g.k) + ", " + std::to_string(g.s) + ")");
        const Count m = point_edges(config, g);
        if (m < 0 || m > binomial(g.n, g.k))
            throw InputError("sweep config: edge count " + std::to_string(m) + " exceeds C(" + std::to_string(g.n) +
                             ", " + std::to_string(g.k) + ")");
    }
}

// Seed splitting: point_seed = derive(base, grid index), trial_seed =
// derive(point_seed, trial index), member i of the trial's family uses
// derive(trial_seed, i). Any single trial replays from its recorded seed.
inline auto sweep_trial_family(const GridPoint & g, Count edges, std::uint64_t trial_seed, ColoringMode mode)
    -> HypergraphFamily
{
    HypergraphFamily family;
    family.n = g.n;
    family.k = g.k;
    for (int i = 0; i < g.s; ++i) {
        RandomInstanceSpec spec;
        spec.n = g.n;
        spec.k = g.k;
        spec.m = edges;
        spec.seed = derive_seed(trial_seed, static_cast<std::uint64_t>(i));
        spec.coloring_mode = mode;
        family.members.push_back(random_instance(spec));
    }
    return family;
}

namespace harness_detail {

    inline auto run_solver(const HypergraphFamily & family, SweepRecord & record) -> void
    {
        try {
            const auto outcome = find_rainbow_matching(family);
            record.found = outcome.found;
            record.valid = outcome.found && is_valid_matching(family, *outcome.matching);
            record.elapsed_ms = outcome.elapsed.count();
        }
        catch (const std::exception & ex) {
            record.found = false;
            record.valid = false;
            record.note = ex.what();
        }
    }

    inline auto run_proof(const HypergraphFamily & family, SweepRecord & record) -> void
    {
        const auto start = std::chrono::steady_clock::now();
        try {
            const auto result = theorem1_construct(family);
            record.found = true;
            record.valid = is_valid_matching(family, result.matching);
        }
        catch (const std::exception & ex) {
            record.found = false;
            record.valid = false;
            record.note = ex.what();
        }
        record.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }

} // namespace harness_detail

// Runs every configured engine on every (grid point, trial) pair, in
// deterministic order. Engine failures (thrown diagnostics) are recorded on
// the trial, never propagated.
inline auto sweep(const SweepConfig & config) -> SweepReport
{
    validate_config(config);
    SweepReport report;
    report.config = config;
    for (std::size_t gi = 0; gi < config.grid.size(); ++gi) {
        const auto & g = config.grid[gi];
        const Count m = point_edges(config, g);
        const bool exploratory = m <= threshold(g.n, g.k, g.s);
        const std::uint64_t point_seed = derive_seed(config.seed, static_cast<std::uint64_t>(gi));
        for (int t = 0; t < config.trials; ++t) {
            const std::uint64_t trial_seed = derive_seed(point_seed, static_cast<std::uint64_t>(t));
            const auto family = sweep_trial_family(g, m, trial_seed, config.coloring_mode);
            auto base = SweepRecord{};
            base.n = g.n;
            base.k = g.k;
            base.s = g.s;
            base.seed = trial_seed;
            base.edges = m;
            base.coloring_mode = config.coloring_mode;
            base.exploratory = exploratory;
            if (config.engine != EngineKind::Proof) {
                auto record = base;
                record.engine = EngineKind::Solver;
                harness_detail::run_solver(family, record);
                report.records.push_back(std::move(record));
            }
            if (config.engine != EngineKind::Solver) {
                auto record = base;
                record.engine = EngineKind::Proof;
                harness_detail::run_proof(family, record);
                report.records.push_back(std::move(record));
            }
        }
    }
    return report;
}

// ----------------------------------------------------------------------------
// report serialization
// ----------------------------------------------------------------------------

// CSV rows repeat the report deterministically; only elapsed_ms varies
// between reruns, and it is the last column so diffs can drop it wholesale.
inline auto sweep_report_csv(const SweepReport & report) -> std::string
{
    std::string out = "n,k,s,seed,engine,edges,found,valid,elapsed_ms\n";
    char elapsed[32];
    for (const auto & r : report.records) {
        std::snprintf(elapsed, sizeof elapsed, "%.3f", r.elapsed_ms);
        out += std::to_string(r.n) + ',' + std::to_string(r.k) + ',' + std::to_string(r.s) + ',' +
               std::to_string(r.seed) + ',' + to_string(r.engine) + ',' + std::to_string(r.edges) + ',' +
               (r.found ? "true" : "false") + ',' + (r.valid ? "true" : "false") + ',' + elapsed + '\n';
    }
    return out;
}

inline auto config_to_json(const SweepConfig & config) -> nlohmann::json
{
    nlohmann::json grid = nlohmann::json::array();
    for (const auto & g : config.grid)
        grid.push_back({g.n, g.k, g.s});
    nlohmann::json out{{"grid", std::move(grid)},
                       {"trials", config.trials},
                       {"coloring_mode", to_string(config.coloring_mode)},
                       {"seed", config.seed},
                       {"engine", to_string(config.engine)}};
    if (config.edges)
        out["edges"] = *config.edges;
    return out;
}

inline auto sweep_report_json(const SweepReport & report) -> nlohmann::json
{
    nlohmann::json records = nlohmann::json::array();
    Count found = 0, valid = 0, exploratory = 0;
    for (const auto & r : report.records) {
        found += r.found ? 1 : 0;
        valid += r.valid ? 1 : 0;
        exploratory += r.exploratory ? 1 : 0;
        records.push_back({{"n", r.n},
                           {"k", r.k},
                           {"s", r.s},
                           {"seed", r.seed},
                           {"engine", to_string(r.engine)},
                           {"edges", r.edges},
                           {"coloring_mode", to_string(r.coloring_mode)},
                           {"exploratory", r.exploratory},
                           {"found", r.found},
                           {"valid", r.valid},
                           {"note", r.note},
                           {"elapsed_ms", r.elapsed_ms}});
    }
    return nlohmann::json{{"config", config_to_json(report.config)},
                          {"records", std::move(records)},
                          {"summary",
                           {{"records", report.records.size()},
                            {"found", found},
                            {"valid", valid},
                            {"exploratory", exploratory}}}};
}

// Strict config reader: keys are exactly {grid, trials, edges, coloring_mode,
// seed, engine}, with edges optional and grid entries written [n, k, s].
inline auto sweep_config_from_json(const nlohmann::json & j) -> SweepConfig
{
    try {
        if (! j.is_object())
            throw InputError("sweep config: expected a JSON object");
        for (const auto & [key, value] : j.items()) {
            (void) value;
            if (key != "grid" && key != "trials" && key != "edges" && key != "coloring_mode" && key != "seed" &&
                key != "engine")
                throw InputError("sweep config: unknown key '" + key + "'");
        }
        for (const char * key : {"grid", "trials", "coloring_mode", "seed", "engine"})
            if (! j.contains(key))
                throw InputError(std::string("sweep config: missing key '") + key + "'");
        SweepConfig config;
        for (const auto & entry : j.at("grid")) {
            if (! entry.is_array() || entry.size() != 3)
                throw InputError("sweep config: each grid entry must be [n, k, s]");
            config.grid.push_back({entry.at(0).get<int>(), entry.at(1).get<int>(), entry.at(2).get<int>()});
        }
        config.trials = j.at("trials").get<int>();
        if (j.contains("edges"))
            config.edges = j.at("edges").get<Count>();
        config.coloring_mode = coloring_mode_from_string(j.at("coloring_mode").get<std::string>());
        config.seed = j.at("seed").get<std::uint64_t>();
        config.engine = engine_from_string(j.at("engine").get<std::string>());
        validate_config(config);
        return config;
    }
    catch (const nlohmann::json::exception & ex) {
        throw InputError(std::string("sweep config: ") + ex.what());
    }
}

// ----------------------------------------------------------------------------
// tightness: the cover construction sits exactly at the threshold
// ----------------------------------------------------------------------------

struct TightnessReport {
    int n = 0, k = 0, s = 0;
    Count edges_per_member = 0;
    Count expected_edges = 0; // threshold(n, k, s)
    bool found = false;       // solver verdict on s identical cover members
    auto ok() const -> bool { return edges_per_member == expected_edges && ! found; }
};

inline auto tightness_check(int n, int k, int s) -> TightnessReport
{
    if (s < 1 || k < 2 || static_cast<long long>(k) * s > n)
        throw InputError("tightness_check: need k >= 2, s >= 1 and n >= k s");
    TightnessReport report;
    report.n = n;
    report.k = k;
    report.s = s;
    report.expected_edges = threshold(n, k, s);
    HypergraphFamily family;
    family.n = n;
    family.k = k;
    const auto member = cover_construction(n, k, s);
    report.edges_per_member = member.edge_count();
    family.members.assign(static_cast<std::size_t>(s), member);
    report.found = find_rainbow_matching(family).found;
    return report;
}

inline auto to_json(const TightnessReport & r) -> nlohmann::json
{
    return {{"n", r.n},
            {"k", r.k},
            {"s", r.s},
            {"edges_per_member", r.edges_per_member},
            {"expected_edges", r.expected_edges},
            {"found", r.found},
            {"ok", r.ok()}};
}

// ----------------------------------------------------------------------------
// the two-member complement pair beats the one-member count yet
// has no 2-rainbow matching
// ----------------------------------------------------------------------------

struct CounterexampleReport {
    int k = 0;
    Count edges_per_member = 0;
    Count expected_edges = 0;    // C(2k, k)
    Count single_threshold = 0;  // C(2k-1, k), the s = 1 edge bound it beats
    bool members_rainbow = false;
    bool found = false; // exhaustive verdict
    auto ok() const -> bool
    {
        return edges_per_member == expected_edges && edges_per_member > single_threshold && members_rainbow &&
               ! found;
    }
};

inline auto counterexample_check(int k, Count brute_cap = SolveOptions{}.brute_cap) -> CounterexampleReport
{
    if (k < 2)
        throw InputError("counterexample_check: need k >= 2");
    CounterexampleReport report;
    report.k = k;
    report.expected_edges = binomial(2 * k, k);
    report.single_threshold = binomial(2 * k - 1, k);
    const auto family = complement_pair(k);
    report.edges_per_member = family.members[0].edge_count();
    report.members_rainbow = is_rainbow(family.members[0]) && is_rainbow(family.members[1]);
    SolveOptions options;
    options.brute_cap = brute_cap;
    report.found = brute_force_matching(family, options).found; // SizeError above the cap
    return report;
}

inline auto to_json(const CounterexampleReport & r) -> nlohmann::json
{
    return {{"k", r.k},
            {"edges_per_member", r.edges_per_member},
            {"expected_edges", r.expected_edges},
            {"single_threshold", r.single_threshold},
            {"members_rainbow", r.members_rainbow},
            {"found", r.found},
            {"ok", r.ok()}};
}

} // namespace rainbow
