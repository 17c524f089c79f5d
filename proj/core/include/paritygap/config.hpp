// Scan configuration and its digest.
//
// The digest covers exactly the fields that determine scan results:
// range, checks, shard size, counterexample cap, and the square-index
// subject range. Worker count and file paths are deliberately excluded,
// so the same scan resumed under a different worker count is accepted
// and still produces byte-identical output.

#pragma once

#include <cstdint>
#include <string>

#include "paritygap/checks.hpp"

namespace paritygap {

inline constexpr uint64_t kDefaultShardSize = uint64_t{1} << 21;
inline constexpr uint32_t kDefaultCounterexampleCap = 100;

struct ScanConfig {
    uint64_t range_lo = 3;
    uint64_t range_hi = 0;
    CheckSet checks;
    uint64_t shard_size = kDefaultShardSize;
    uint32_t worker_count = 1;
    uint32_t counterexample_cap = kDefaultCounterexampleCap;
    std::string checkpoint_path;  // empty: no checkpointing
    bool resume = false;

    // Subject range [square_lo, square_hi) for legendre / oppermann.
    // Both zero means "derive": N from 1 up to isqrt(range_hi), keeping
    // the square windows at the same scale as the pair range.
    uint64_t square_lo = 0;
    uint64_t square_hi = 0;
};

// Validates and fills derived defaults. Throws UsageError for
// malformed ranges and CapacityError when a range cannot be scanned
// within the integer limits of the enabled checks.
ScanConfig normalized(const ScanConfig& config);

// Hex digest of the result-determining fields of a normalized config.
std::string config_digest(const ScanConfig& config);

}  // namespace paritygap
