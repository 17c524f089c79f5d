// Resumable scan state: which shards finished and the merged summary of
// exactly those shards. Stored as canonical JSON guarded by a payload
// digest; files are written to a temp name and renamed so an interrupted
// save never leaves a truncated checkpoint behind.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "paritygap/summary.hpp"

namespace paritygap {

inline constexpr uint32_t kCheckpointVersion = 1;

struct Checkpoint {
    uint32_t version = kCheckpointVersion;
    std::string config_digest;
    std::vector<uint64_t> completed_shards;  // ascending
    RangeSummary partial_summary;

    friend bool operator==(const Checkpoint&, const Checkpoint&) = default;
};

// Atomic write (temp file + rename). Throws IoError on failure.
void checkpoint_save(const Checkpoint& state, const std::string& path);

// Loads and verifies. Throws IoError when unreadable, IntegrityError
// when the payload does not match its digest (the message carries both
// digests), and UsageError when the version is not supported.
Checkpoint checkpoint_load(const std::string& path);

}  // namespace paritygap
