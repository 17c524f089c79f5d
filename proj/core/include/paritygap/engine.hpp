// Scan driver: plans shards over the pair range (and, when square
// checks are enabled, over the square-index range), runs them on a
// worker pool, and folds per-shard summaries into one RangeSummary.
//
// Determinism contract: the produced summary is a pure function of the
// configuration. Shards are self-contained (a pair belongs to the shard
// containing its p_lo; the sieve looks ahead for p_hi), the merge is a
// commutative monoid, and the fold happens in ascending shard order, so
// neither worker count nor completion order nor an interrupt/resume
// cycle can change a single output byte.

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "paritygap/config.hpp"
#include "paritygap/summary.hpp"

namespace paritygap {

struct ShardRange {
    uint64_t lo = 0;
    uint64_t hi = 0;

    friend bool operator==(const ShardRange&, const ShardRange&) = default;
};

// Partition of [range_lo, range_hi) into consecutive shards of width
// <= shard_size. Throws UsageError on an empty range.
std::vector<ShardRange> plan_shards(const ScanConfig& config);

// Observation hooks for tests and progress display. on_shard_complete
// runs after the shard result is recorded (and the checkpoint, if any,
// is saved); throwing from it stops the scan between shards.
struct EngineHooks {
    std::function<void(uint64_t shard_index, uint64_t completed, uint64_t total)>
        on_shard_complete;
};

// Runs every enabled check over its subjects in the configured range.
// Honors config.checkpoint_path / config.resume. Capacity errors are
// rethrown with the offending shard identified; a checkpoint digest
// mismatch refuses the resume with UsageError.
RangeSummary run_scan(const ScanConfig& config, const EngineHooks* hooks = nullptr);

}  // namespace paritygap
