// Mergeable scan aggregate.
//
// RangeSummary is a commutative monoid under merge_summaries with
// empty_summary as identity: counters add, extremes keep the winning
// side with ties broken towards the smaller p_lo, and counterexample
// lists merge in subject order and truncate at the configured cap
// (overflow is counted, never silently dropped). Because merging is
// order-independent, the final summary is a pure function of the scan
// configuration: worker count, scheduling, and interruption pattern
// cannot leak into the bytes.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "paritygap/checks.hpp"
#include "paritygap/config.hpp"
#include "paritygap/primes.hpp"

#include "json.hpp"

namespace paritygap {

inline constexpr uint32_t kReportSchemaVersion = 1;

// One recorded predicate failure. subject is p_lo for pair checks and N
// for square checks; subject_hi carries p_hi for pair subjects.
struct CounterexampleRecord {
    uint64_t subject = 0;
    uint64_t subject_hi = 0;
    uint64_t mi = 0;        // offending probe point, when applicable
    int64_t value = 0;      // offending quantity (multiple, count, margin)
    std::string note;

    friend bool operator==(const CounterexampleRecord&,
                           const CounterexampleRecord&) = default;
};

struct CounterexampleList {
    std::vector<CounterexampleRecord> records;  // subject-ascending
    uint64_t suppressed = 0;

    friend bool operator==(const CounterexampleList&,
                           const CounterexampleList&) = default;
};

struct CheckTally {
    uint64_t holds = 0;
    uint64_t fails = 0;

    friend bool operator==(const CheckTally&, const CheckTally&) = default;
};

struct GapExtreme {
    uint64_t gap = 0;
    uint64_t p_lo = 0;

    friend bool operator==(const GapExtreme&, const GapExtreme&) = default;
};

struct MarginExtreme {
    int64_t margin = 0;
    uint64_t p_lo = 0;

    friend bool operator==(const MarginExtreme&, const MarginExtreme&) = default;
};

struct AndricaExtreme {
    PrimePair pair;
    uint64_t rank_key = 0;

    friend bool operator==(const AndricaExtreme&, const AndricaExtreme&) = default;
};

struct RangeSummary {
    uint32_t schema_version = kReportSchemaVersion;
    std::string config_digest;

    // Config echo for reports and digest verification.
    uint64_t range_lo = 0;
    uint64_t range_hi = 0;
    uint64_t square_lo = 0;
    uint64_t square_hi = 0;
    uint64_t shard_size = 0;
    uint32_t counterexample_cap = kDefaultCounterexampleCap;
    CheckSet checks;

    uint64_t pairs_checked = 0;
    uint64_t squares_checked = 0;
    uint64_t divergence_count = 0;
    uint64_t divisions = 0;

    std::array<CheckTally, kCheckCount> tallies{};
    std::array<CounterexampleList, kCheckCount> counterexamples{};

    std::optional<GapExtreme> max_gap;
    std::optional<MarginExtreme> min_theorem1_margin;
    std::optional<AndricaExtreme> max_andrica;

    CheckTally& tally(CheckKind kind) { return tallies[uint8_t(kind)]; }
    const CheckTally& tally(CheckKind kind) const { return tallies[uint8_t(kind)]; }
    CounterexampleList& records(CheckKind kind) {
        return counterexamples[uint8_t(kind)];
    }
    const CounterexampleList& records(CheckKind kind) const {
        return counterexamples[uint8_t(kind)];
    }

    // Recorded plus suppressed counterexamples across all checks.
    uint64_t total_counterexamples() const;

    friend bool operator==(const RangeSummary&, const RangeSummary&) = default;
};

// Identity element for merge_summaries under the given config.
RangeSummary empty_summary(const ScanConfig& normalized_config);

// Appends a record, keeping subject order and the cap. Counts overflow
// in suppressed.
void add_counterexample(RangeSummary& summary, CheckKind kind,
                        CounterexampleRecord record);

// Merges two summaries of the same scan. Throws UsageError when the
// config digests differ.
RangeSummary merge_summaries(const RangeSummary& a, const RangeSummary& b);

// Canonical JSON image: sorted keys, integers and strings only.
nlohmann::json summary_to_json(const RangeSummary& summary);
RangeSummary summary_from_json(const nlohmann::json& j);

}  // namespace paritygap
