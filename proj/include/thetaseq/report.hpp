// report.hpp
// Scan output records.  A CrossoverReport captures, for one named
// inequality, the smallest index from which it held all the way to the scan
// ceiling, every failing index below that point, and any index whose verdict
// stayed uncertain after precision escalation.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace thetaseq {

struct CrossoverReport {
    std::string id;
    std::string source;
    std::size_t claimed_start = 0;
    std::size_t verified_start = 0;  // scan_ceiling+1 when never established
    std::vector<std::size_t> exceptions;
    std::vector<std::size_t> uncertain;
    std::size_t scan_ceiling = 0;
    std::int64_t wall_time_ms = 0;

    bool confirms_claim() const {
        return uncertain.empty() && verified_start <= claimed_start;
    }
    bool claim_reached() const { return claimed_start <= scan_ceiling; }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["id"] = id;
        j["source"] = source;
        j["claimed_start"] = claimed_start;
        j["verified_start"] = verified_start;
        j["exceptions"] = exceptions;
        j["uncertain"] = uncertain;
        j["scan_ceiling"] = scan_ceiling;
        j["wall_time_ms"] = wall_time_ms;
        return j;
    }
};

}  // namespace thetaseq
