#include "paritygap/checkpoint.hpp"

#include <cstdio>
#include <fstream>

#include "paritygap/checked_math.hpp"

namespace paritygap {

namespace {

nlohmann::json payload_json(const Checkpoint& state) {
    nlohmann::json j;
    j["checkpoint_version"] = state.version;
    j["completed_shards"] = state.completed_shards;
    j["config_digest"] = state.config_digest;
    j["partial_summary"] = summary_to_json(state.partial_summary);
    return j;
}

}  // namespace

void checkpoint_save(const Checkpoint& state, const std::string& path) {
    nlohmann::json j = payload_json(state);
    j["payload_digest"] = to_hex(fnv1a64(payload_json(state).dump()));

    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open checkpoint file for writing: " + tmp);
        out << j.dump(2) << '\n';
        if (!out.flush()) throw IoError("failed writing checkpoint: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw IoError("failed to move checkpoint into place: " + path);
    }
}

Checkpoint checkpoint_load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open checkpoint file: " + path);

    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw IntegrityError("checkpoint is not valid JSON: " + std::string(e.what()));
    }

    try {
        Checkpoint state;
        state.version = j.at("checkpoint_version").get<uint32_t>();
        if (state.version != kCheckpointVersion) {
            throw UsageError("unsupported checkpoint version " +
                             std::to_string(state.version) + " (expected " +
                             std::to_string(kCheckpointVersion) + ")");
        }
        state.config_digest = j.at("config_digest").get<std::string>();
        state.completed_shards =
            j.at("completed_shards").get<std::vector<uint64_t>>();
        state.partial_summary = summary_from_json(j.at("partial_summary"));

        std::string stored = j.at("payload_digest").get<std::string>();
        std::string computed = to_hex(fnv1a64(payload_json(state).dump()));
        if (stored != computed) {
            throw IntegrityError("checkpoint digest mismatch: stored " + stored +
                                 ", computed " + computed);
        }
        return state;
    } catch (const nlohmann::json::exception& e) {
        throw IntegrityError("checkpoint structure is malformed: " +
                             std::string(e.what()));
    }
}

}  // namespace paritygap
