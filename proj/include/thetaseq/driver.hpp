// driver.hpp
// End-to-end orchestration: size the tables for a requested index ceiling,
// build (or reload) them, run every named inequality and conjecture scan,
// and assemble the consolidated report.  This is the engine behind the
// `scan-all` command; tests call it directly so CLI and library agree.

#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "thetaseq/bounds.hpp"
#include "thetaseq/checkpoint.hpp"
#include "thetaseq/conjectures.hpp"
#include "thetaseq/counting.hpp"

namespace thetaseq {

// Counting checkers square their arguments, so tables cannot follow the full
// index ceiling; Brocard is capped here and the others follow table coverage.
constexpr std::size_t kBrocardCap = 1000;

struct BuildPlan {
    std::uint64_t sieve_limit = 0;
    std::size_t theta_count = 0;
};

// Sieve limit covering: theta to ceiling+1, and pi_theta arguments up to
// p_{brocard+1}^2 (so the squared-argument scans get a usable range).
inline BuildPlan plan_for_ceiling(std::size_t ceiling) {
    const std::size_t brocard_hi = std::min(ceiling, kBrocardCap);
    // small pre-sieve for the exact prime p_{brocard_hi + 1}
    const PrimeTable pre =
        PrimeTable::sieve(PrimeTable::limit_for_count(brocard_hi + 2));
    const double p = static_cast<double>(pre.nth(brocard_hi + 1));
    // theta(x) < x in range, so a ~2% overshoot guarantees theta coverage
    const auto for_counting = static_cast<std::uint64_t>(p * p * 1.02 + 1024);
    const std::uint64_t for_theta = PrimeTable::limit_for_count(ceiling + 2);
    BuildPlan plan;
    plan.sieve_limit = std::max(for_counting, for_theta);
    return plan;
}

struct BuiltTables {
    PrimeTable primes;
    ThetaTable theta;
    Escalator escalator;

    BuiltTables(PrimeTable p, std::size_t theta_count, bool escalation)
        : primes(std::move(p)),
          theta(ThetaTable::build(primes, theta_count)),
          escalator(primes, escalation) {}

    // theta and escalator point into `primes`; keep the bundle pinned
    BuiltTables(const BuiltTables&) = delete;
    BuiltTables& operator=(const BuiltTables&) = delete;

    Tables view() { return Tables{primes, theta, &escalator}; }
};

inline BuiltTables build_tables(std::size_t ceiling, bool escalation = true,
                                std::optional<std::uint64_t> limit_override = {}) {
    const BuildPlan plan = plan_for_ceiling(ceiling);
    const std::uint64_t limit = limit_override.value_or(plan.sieve_limit);
    PrimeTable primes = PrimeTable::sieve(limit);
    if (primes.count() < ceiling + 2)
        throw insufficient_table_error("sieve limit too small for ceiling");
    const std::size_t n_theta = primes.count() - 1;  // keep p_{n+1} for every theta_n
    return BuiltTables(std::move(primes), n_theta, escalation);
}

struct ScanAllConfig {
    std::size_t ceiling = 1'000'000;
    unsigned workers = 0;  // 0 = hardware
    bool escalation = true;
    std::optional<std::string> checkpoint;  // load if present, else build+save
};

struct ScanAllResult {
    std::vector<CrossoverReport> bounds;
    std::vector<CrossoverReport> conjectures;
    std::size_t ceiling = 0;
    std::int64_t wall_time_ms = 0;
    std::size_t unresolved_uncertain = 0;

    // claim confirmed over the scanned range?
    std::vector<std::string> refuted;      // verified_start > claimed_start
    std::vector<std::string> not_reached;  // claimed_start beyond ceiling

    bool all_confirmed() const {
        return refuted.empty() && unresolved_uncertain == 0;
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["ceiling"] = ceiling;
        j["bounds"] = nlohmann::ordered_json::array();
        for (const auto& r : bounds) j["bounds"].push_back(r.to_json());
        j["conjectures"] = nlohmann::ordered_json::array();
        for (const auto& r : conjectures) j["conjectures"].push_back(r.to_json());
        j["summary"]["refuted"] = refuted;
        j["summary"]["not_reached"] = not_reached;
        j["summary"]["unresolved_uncertain"] = unresolved_uncertain;
        j["summary"]["all_confirmed"] = all_confirmed();
        j["wall_time_ms"] = wall_time_ms;
        return j;
    }
};

inline ScanAllResult run_scan_all(BuiltTables& tables, const ScanAllConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    const unsigned workers = cfg.workers == 0 ? default_workers() : cfg.workers;
    tables.escalator.set_enabled(cfg.escalation);
    Tables t = tables.view();

    ScanAllResult out;
    out.ceiling = cfg.ceiling;

    auto digest = [&](const CrossoverReport& r) {
        if (!r.claim_reached())
            out.not_reached.push_back(r.id);
        else if (r.verified_start > r.claimed_start)
            out.refuted.push_back(r.id);
        out.unresolved_uncertain += r.uncertain.size();
    };

    for (const auto& info : bound_registry()) {
        out.bounds.push_back(scan_bound(t, info.id, 1, cfg.ceiling, workers));
        digest(out.bounds.back());
    }
    for (const auto& info : conjecture_registry()) {
        const std::size_t hi = info.id == ConjectureId::brocard
                                   ? std::min(cfg.ceiling, kBrocardCap)
                                   : cfg.ceiling;
        out.conjectures.push_back(scan_conjecture(t, info.id, 1, hi, workers));
        digest(out.conjectures.back());
    }

    out.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
    return out;
}

}  // namespace thetaseq
