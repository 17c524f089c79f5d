#include "paritygap/config.hpp"

#include "paritygap/checked_math.hpp"

namespace paritygap {

ScanConfig normalized(const ScanConfig& config) {
    ScanConfig cfg = config;
    if (cfg.range_lo < 3) throw UsageError("scan range must start at 3 or above");
    if (cfg.range_hi <= cfg.range_lo) throw UsageError("scan range is empty");
    require_within_limit(cfg.range_hi, "scan range end");
    if (cfg.checks.empty()) throw UsageError("no checks selected");
    if (cfg.shard_size < 2) throw UsageError("shard size must be at least 2");
    if (cfg.counterexample_cap < 1) throw UsageError("counterexample cap must be at least 1");
    if (cfg.worker_count < 1) cfg.worker_count = 1;

    if (cfg.checks.any_pair_check()) {
        // Pair scans square the midpoint; keep that within kLimit.
        if (cfg.range_hi > (uint64_t{1} << 31)) {
            throw CapacityError("pair checks need range_hi <= 2^31 so midpoint squares fit");
        }
    }
    if (cfg.checks.contains(CheckKind::brocard)) {
        // p_hi^2 <= kLimit; the successor of the last p_lo stays below
        // 2 * range_hi, checked exactly per pair at scan time.
        if (cfg.range_hi > (uint64_t{1} << 31)) {
            throw CapacityError("brocard needs range_hi <= 2^31 so p_hi squares fit");
        }
    }

    if (cfg.checks.any_square_check()) {
        if (cfg.square_lo == 0 && cfg.square_hi == 0) {
            cfg.square_lo = 1;
            cfg.square_hi = isqrt(cfg.range_hi) + 1;
        }
        if (cfg.square_lo < 1) throw UsageError("square subject range must start at 1 or above");
        if (cfg.square_hi <= cfg.square_lo) {
            throw UsageError("square subject range is empty");
        }
        // Largest window end is N(N+1) < (N+1)^2.
        uint64_t max_n = cfg.square_hi - 1;
        checked_mul(max_n + 1, max_n + 1);
    } else {
        cfg.square_lo = 0;
        cfg.square_hi = 0;
    }
    return cfg;
}

std::string config_digest(const ScanConfig& config) {
    std::string canon = "paritygap-scan-v1";
    canon += "|lo=" + std::to_string(config.range_lo);
    canon += "|hi=" + std::to_string(config.range_hi);
    canon += "|checks=";
    bool first = true;
    for (const std::string& token : config.checks.sorted_tokens()) {
        if (!first) canon += ",";
        canon += token;
        first = false;
    }
    canon += "|shard=" + std::to_string(config.shard_size);
    canon += "|cap=" + std::to_string(config.counterexample_cap);
    canon += "|sqlo=" + std::to_string(config.square_lo);
    canon += "|sqhi=" + std::to_string(config.square_hi);
    return to_hex(fnv1a64(canon));
}

}  // namespace paritygap
