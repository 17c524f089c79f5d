#include "paritygap/summary.hpp"

#include <algorithm>
#include <tuple>

#include "paritygap/conjectures.hpp"

namespace paritygap {

namespace {

auto record_key(const CounterexampleRecord& r) {
    return std::tie(r.subject, r.subject_hi, r.mi);
}

// Keep the cap smallest records by subject; count the rest.
void truncate_to_cap(CounterexampleList& list, uint32_t cap) {
    if (list.records.size() > cap) {
        list.suppressed += list.records.size() - cap;
        list.records.resize(cap);
    }
}

CounterexampleList merge_lists(const CounterexampleList& a,
                               const CounterexampleList& b, uint32_t cap) {
    CounterexampleList out;
    out.records.reserve(a.records.size() + b.records.size());
    std::merge(a.records.begin(), a.records.end(), b.records.begin(),
               b.records.end(), std::back_inserter(out.records),
               [](const CounterexampleRecord& x, const CounterexampleRecord& y) {
                   return record_key(x) < record_key(y);
               });
    out.suppressed = a.suppressed + b.suppressed;
    truncate_to_cap(out, cap);
    return out;
}

}  // namespace

uint64_t RangeSummary::total_counterexamples() const {
    uint64_t total = 0;
    for (const CounterexampleList& list : counterexamples) {
        total += list.records.size() + list.suppressed;
    }
    return total;
}

RangeSummary empty_summary(const ScanConfig& cfg) {
    RangeSummary s;
    s.config_digest = config_digest(cfg);
    s.range_lo = cfg.range_lo;
    s.range_hi = cfg.range_hi;
    s.square_lo = cfg.square_lo;
    s.square_hi = cfg.square_hi;
    s.shard_size = cfg.shard_size;
    s.counterexample_cap = cfg.counterexample_cap;
    s.checks = cfg.checks;
    return s;
}

void add_counterexample(RangeSummary& summary, CheckKind kind,
                        CounterexampleRecord record) {
    CounterexampleList& list = summary.records(kind);
    auto pos = std::upper_bound(
        list.records.begin(), list.records.end(), record,
        [](const CounterexampleRecord& x, const CounterexampleRecord& y) {
            return record_key(x) < record_key(y);
        });
    list.records.insert(pos, std::move(record));
    truncate_to_cap(list, summary.counterexample_cap);
}

RangeSummary merge_summaries(const RangeSummary& a, const RangeSummary& b) {
    if (a.config_digest != b.config_digest) {
        throw UsageError("cannot merge summaries with different config digests");
    }

    RangeSummary out = a;
    out.pairs_checked += b.pairs_checked;
    out.squares_checked += b.squares_checked;
    out.divergence_count += b.divergence_count;
    out.divisions += b.divisions;

    for (size_t i = 0; i < kCheckCount; ++i) {
        out.tallies[i].holds += b.tallies[i].holds;
        out.tallies[i].fails += b.tallies[i].fails;
        out.counterexamples[i] =
            merge_lists(a.counterexamples[i], b.counterexamples[i],
                        out.counterexample_cap);
    }

    if (b.max_gap) {
        if (!out.max_gap || b.max_gap->gap > out.max_gap->gap ||
            (b.max_gap->gap == out.max_gap->gap &&
             b.max_gap->p_lo < out.max_gap->p_lo)) {
            out.max_gap = b.max_gap;
        }
    }
    if (b.min_theorem1_margin) {
        if (!out.min_theorem1_margin ||
            b.min_theorem1_margin->margin < out.min_theorem1_margin->margin ||
            (b.min_theorem1_margin->margin == out.min_theorem1_margin->margin &&
             b.min_theorem1_margin->p_lo < out.min_theorem1_margin->p_lo)) {
            out.min_theorem1_margin = b.min_theorem1_margin;
        }
    }
    if (b.max_andrica) {
        if (!out.max_andrica ||
            andrica_rank_less(out.max_andrica->pair, out.max_andrica->rank_key,
                              b.max_andrica->pair, b.max_andrica->rank_key)) {
            out.max_andrica = b.max_andrica;
        }
    }
    return out;
}

nlohmann::json summary_to_json(const RangeSummary& s) {
    nlohmann::json j;
    j["schema_version"] = s.schema_version;

    nlohmann::json config;
    config["cap"] = s.counterexample_cap;
    config["checks"] = s.checks.sorted_tokens();
    config["digest"] = s.config_digest;
    config["range_lo"] = s.range_lo;
    config["range_hi"] = s.range_hi;
    config["shard_size"] = s.shard_size;
    config["square_lo"] = s.square_lo;
    config["square_hi"] = s.square_hi;
    j["config"] = config;

    nlohmann::json counters;
    counters["divergences"] = s.divergence_count;
    counters["divisions"] = s.divisions;
    counters["pairs_checked"] = s.pairs_checked;
    counters["squares_checked"] = s.squares_checked;
    j["counters"] = counters;

    nlohmann::json checks = nlohmann::json::object();
    nlohmann::json cex = nlohmann::json::object();
    for (CheckKind kind : s.checks.kinds()) {
        std::string token(check_token(kind));
        checks[token] = {{"fails", s.tally(kind).fails},
                         {"holds", s.tally(kind).holds}};
        nlohmann::json records = nlohmann::json::array();
        for (const CounterexampleRecord& r : s.records(kind).records) {
            records.push_back({{"mi", r.mi},
                               {"note", r.note},
                               {"subject", r.subject},
                               {"subject_hi", r.subject_hi},
                               {"value", r.value}});
        }
        cex[token] = {{"records", records},
                      {"suppressed", s.records(kind).suppressed}};
    }
    j["checks"] = checks;
    j["counterexamples"] = cex;

    nlohmann::json extremes;
    extremes["max_gap"] =
        s.max_gap ? nlohmann::json{{"gap", s.max_gap->gap}, {"p_lo", s.max_gap->p_lo}}
                  : nlohmann::json(nullptr);
    extremes["min_theorem1_margin"] =
        s.min_theorem1_margin
            ? nlohmann::json{{"margin", s.min_theorem1_margin->margin},
                             {"p_lo", s.min_theorem1_margin->p_lo}}
            : nlohmann::json(nullptr);
    extremes["max_andrica"] =
        s.max_andrica
            ? nlohmann::json{{"key", rank_key_rational(s.max_andrica->rank_key)},
                             {"p_hi", s.max_andrica->pair.p_hi},
                             {"p_lo", s.max_andrica->pair.p_lo}}
            : nlohmann::json(nullptr);
    j["extremes"] = extremes;
    return j;
}

RangeSummary summary_from_json(const nlohmann::json& j) {
    try {
        RangeSummary s;
        s.schema_version = j.at("schema_version").get<uint32_t>();

        const auto& config = j.at("config");
        s.counterexample_cap = config.at("cap").get<uint32_t>();
        s.config_digest = config.at("digest").get<std::string>();
        s.range_lo = config.at("range_lo").get<uint64_t>();
        s.range_hi = config.at("range_hi").get<uint64_t>();
        s.shard_size = config.at("shard_size").get<uint64_t>();
        s.square_lo = config.at("square_lo").get<uint64_t>();
        s.square_hi = config.at("square_hi").get<uint64_t>();
        for (const auto& token : config.at("checks")) {
            auto kind = check_from_token(token.get<std::string>());
            if (!kind) throw IoError("summary lists unknown check token");
            s.checks.insert(*kind);
        }

        const auto& counters = j.at("counters");
        s.divergence_count = counters.at("divergences").get<uint64_t>();
        s.divisions = counters.at("divisions").get<uint64_t>();
        s.pairs_checked = counters.at("pairs_checked").get<uint64_t>();
        s.squares_checked = counters.at("squares_checked").get<uint64_t>();

        for (CheckKind kind : s.checks.kinds()) {
            std::string token(check_token(kind));
            const auto& tally = j.at("checks").at(token);
            s.tally(kind).fails = tally.at("fails").get<uint64_t>();
            s.tally(kind).holds = tally.at("holds").get<uint64_t>();

            const auto& cex = j.at("counterexamples").at(token);
            s.records(kind).suppressed = cex.at("suppressed").get<uint64_t>();
            for (const auto& rec : cex.at("records")) {
                CounterexampleRecord r;
                r.mi = rec.at("mi").get<uint64_t>();
                r.note = rec.at("note").get<std::string>();
                r.subject = rec.at("subject").get<uint64_t>();
                r.subject_hi = rec.at("subject_hi").get<uint64_t>();
                r.value = rec.at("value").get<int64_t>();
                s.records(kind).records.push_back(std::move(r));
            }
        }

        const auto& extremes = j.at("extremes");
        if (!extremes.at("max_gap").is_null()) {
            const auto& g = extremes.at("max_gap");
            s.max_gap = GapExtreme{g.at("gap").get<uint64_t>(),
                                   g.at("p_lo").get<uint64_t>()};
        }
        if (!extremes.at("min_theorem1_margin").is_null()) {
            const auto& m = extremes.at("min_theorem1_margin");
            s.min_theorem1_margin = MarginExtreme{m.at("margin").get<int64_t>(),
                                                  m.at("p_lo").get<uint64_t>()};
        }
        if (!extremes.at("max_andrica").is_null()) {
            const auto& a = extremes.at("max_andrica");
            auto key = rank_key_from_rational(a.at("key").get<std::string>());
            if (!key) throw IoError("summary carries malformed rank key");
            s.max_andrica = AndricaExtreme{
                PrimePair{a.at("p_lo").get<uint64_t>(), a.at("p_hi").get<uint64_t>()},
                *key};
        }
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("malformed summary: ") + e.what());
    }
}

}  // namespace paritygap
