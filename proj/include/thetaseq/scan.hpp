// scan.hpp
// Generic parallel crossover scan.  The index range is split into fixed
// chunks handed out through an atomic counter; per-index verdicts are
// independent, and only non-holding indices are recorded.  Chunk results are
// merged in index order, so the report is identical for any worker count.

#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "thetaseq/report.hpp"
#include "thetaseq/verdict.hpp"

namespace thetaseq {

inline unsigned default_workers() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// check: std::size_t -> Verdict, thread-safe for distinct indices.
template <class Check>
CrossoverReport run_scan(std::string id, std::string source,
                         std::size_t claimed_start, std::size_t lo, std::size_t hi,
                         Check&& check, unsigned workers = default_workers()) {
    const auto t0 = std::chrono::steady_clock::now();

    CrossoverReport rep;
    rep.id = std::move(id);
    rep.source = std::move(source);
    rep.claimed_start = claimed_start;
    rep.scan_ceiling = hi;

    if (hi < lo) {
        rep.verified_start = lo;
        return rep;
    }

    const std::size_t total = hi - lo + 1;
    const std::size_t chunk = std::max<std::size_t>(1024, total / (std::max(1u, workers) * 16));
    const std::size_t n_chunks = (total + chunk - 1) / chunk;

    std::vector<std::vector<std::pair<std::size_t, Verdict>>> found(n_chunks);
    std::atomic<std::size_t> next{0};

    auto body = [&]() {
        for (;;) {
            const std::size_t c = next.fetch_add(1);
            if (c >= n_chunks) return;
            const std::size_t a = lo + c * chunk;
            const std::size_t b = std::min(hi, a + chunk - 1);
            auto& out = found[c];
            for (std::size_t n = a; n <= b; ++n) {
                const Verdict v = check(n);
                if (v != Verdict::holds) out.emplace_back(n, v);
            }
        }
    };

    if (workers <= 1 || n_chunks == 1) {
        body();
    } else {
        std::vector<std::thread> pool;
        const unsigned k = std::min<unsigned>(workers, static_cast<unsigned>(n_chunks));
        pool.reserve(k);
        for (unsigned i = 0; i < k; ++i) pool.emplace_back(body);
        for (auto& th : pool) th.join();
    }

    std::size_t last_bad = 0;
    bool any_bad = false;
    for (const auto& part : found) {
        for (const auto& [n, v] : part) {
            if (v == Verdict::fails) rep.exceptions.push_back(n);
            else rep.uncertain.push_back(n);
            last_bad = n;
            any_bad = true;
        }
    }
    rep.verified_start = any_bad ? last_bad + 1 : lo;

    rep.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
    return rep;
}

}  // namespace thetaseq
