#include "paritygap/engine.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "paritygap/checkpoint.hpp"
#include "paritygap/conjectures.hpp"
#include "paritygap/parity.hpp"

namespace paritygap {

namespace {

struct ShardPlan {
    uint64_t lo = 0;
    uint64_t hi = 0;
    bool squares = false;  // square-index shard instead of a pair shard
};

std::vector<ShardRange> partition(uint64_t lo, uint64_t hi, uint64_t width) {
    std::vector<ShardRange> out;
    for (uint64_t s = lo; s < hi; s += std::min(width, hi - s)) {
        out.push_back({s, std::min(s + width, hi)});
    }
    return out;
}

// Pair shards first, then square-index shards; indices are stable for
// checkpointing.
std::vector<ShardPlan> plan_all(const ScanConfig& cfg) {
    std::vector<ShardPlan> plans;
    if (cfg.checks.any_pair_check()) {
        for (const ShardRange& r : partition(cfg.range_lo, cfg.range_hi, cfg.shard_size)) {
            plans.push_back({r.lo, r.hi, false});
        }
    }
    if (cfg.checks.any_square_check()) {
        for (const ShardRange& r : partition(cfg.square_lo, cfg.square_hi, cfg.shard_size)) {
            plans.push_back({r.lo, r.hi, true});
        }
    }
    return plans;
}

void record_pair_fail(RangeSummary& s, CheckKind kind, const PrimePair& pair,
                      uint64_t mi, int64_t value, std::string note) {
    CounterexampleRecord r;
    r.subject = pair.p_lo;
    r.subject_hi = pair.p_hi;
    r.mi = mi;
    r.value = value;
    r.note = std::move(note);
    add_counterexample(s, kind, std::move(r));
}

void record_square_fail(RangeSummary& s, CheckKind kind, uint64_t n,
                        int64_t value, std::string note) {
    CounterexampleRecord r;
    r.subject = n;
    r.value = value;
    r.note = std::move(note);
    add_counterexample(s, kind, std::move(r));
}

void scan_one_pair(const ScanConfig& cfg, const PrimePair& pair,
                   RangeSummary& s, ScanStats& stats) {
    const CheckSet& checks = cfg.checks;
    ++s.pairs_checked;

    uint64_t gap = pair.gap();
    if (!s.max_gap || gap > s.max_gap->gap) {
        s.max_gap = GapExtreme{gap, pair.p_lo};
    }

    if (checks.contains(CheckKind::parity) || checks.contains(CheckKind::identity)) {
        ParityVerdict v = parity_scan_pair(pair, stats);
        if (checks.contains(CheckKind::parity)) {
            if (v.parity_holds) {
                ++s.tally(CheckKind::parity).holds;
            } else {
                ++s.tally(CheckKind::parity).fails;
                uint64_t mi = *v.first_even_mi;
                int64_t value = int64_t(largest_multiple(pair.p_lo, mi * mi));
                record_pair_fail(s, CheckKind::parity, pair, mi, value,
                                 "even_multiple");
            }
        }
        if (checks.contains(CheckKind::identity)) {
            if (v.identity_holds) {
                ++s.tally(CheckKind::identity).holds;
            } else {
                ++s.tally(CheckKind::identity).fails;
                uint64_t mi = *v.first_identity_violation_mi;
                int64_t value = int64_t(largest_multiple(pair.p_lo, mi * mi));
                record_pair_fail(s, CheckKind::identity, pair, mi, value,
                                 "closed_form_mismatch");
            }
        }
        if (v.divergent) ++s.divergence_count;
    }

    if (checks.contains(CheckKind::lemma1)) {
        if (lemma1_check(pair.p_lo, pair.p_hi)) {
            ++s.tally(CheckKind::lemma1).holds;
        } else {
            ++s.tally(CheckKind::lemma1).fails;
            record_pair_fail(s, CheckKind::lemma1, pair, 0, 0,
                             "product_not_below_midpoint_square");
        }
    }

    if (checks.contains(CheckKind::lemma2)) {
        Lemma2Verdict v = lemma2_check(pair);
        if (v.holds()) {
            ++s.tally(CheckKind::lemma2).holds;
        } else {
            ++s.tally(CheckKind::lemma2).fails;
            record_pair_fail(s, CheckKind::lemma2, pair, 0, 0,
                             !v.midpoint_bound && !v.bertrand ? "both_bounds_failed"
                             : !v.midpoint_bound              ? "midpoint_bound_failed"
                                                              : "bertrand_failed");
        }
    }

    if (checks.contains(CheckKind::chain)) {
        uint64_t m = pair.midpoint();
        std::optional<uint64_t> first_break;
        for (uint64_t mi = pair.p_lo + 1; mi <= m; ++mi) {
            if (!chain_check(pair.p_lo, mi)) {
                first_break = mi;
                break;
            }
        }
        if (!first_break) {
            ++s.tally(CheckKind::chain).holds;
        } else {
            ++s.tally(CheckKind::chain).fails;
            uint64_t k = *first_break - pair.p_lo;
            record_pair_fail(s, CheckKind::chain, pair, *first_break,
                             int64_t(k * k), "chain_broken");
        }
    }

    bool want_gap_bounds = checks.contains(CheckKind::theorem1) ||
                           checks.contains(CheckKind::eq14) ||
                           checks.contains(CheckKind::andrica);
    std::optional<GapVerdict> gv;
    if (want_gap_bounds) gv = gap_bound_check(pair);

    if (checks.contains(CheckKind::theorem1)) {
        if (gv->theorem1_holds) {
            ++s.tally(CheckKind::theorem1).holds;
        } else {
            ++s.tally(CheckKind::theorem1).fails;
            record_pair_fail(s, CheckKind::theorem1, pair, 0, gv->theorem1_margin,
                             "nonpositive_margin");
        }
        if (!s.min_theorem1_margin ||
            gv->theorem1_margin < s.min_theorem1_margin->margin) {
            s.min_theorem1_margin = MarginExtreme{gv->theorem1_margin, pair.p_lo};
        }
    }

    if (checks.contains(CheckKind::eq14)) {
        if (gv->eq14_holds) {
            ++s.tally(CheckKind::eq14).holds;
        } else {
            ++s.tally(CheckKind::eq14).fails;
            record_pair_fail(s, CheckKind::eq14, pair, 0, gv->eq14_margin,
                             "nonpositive_margin");
        }
    }

    if (checks.contains(CheckKind::andrica)) {
        IntervalVerdict v = andrica_check(pair);
        // The square-gap bound implies this one; a pair passing the
        // former but failing the latter would be an arithmetic bug.
        if (gv->theorem1_holds && !v.holds) {
            throw Error("internal invariant violated: gap bound held but "
                        "andrica failed at p_lo=" + std::to_string(pair.p_lo));
        }
        if (v.holds) {
            ++s.tally(CheckKind::andrica).holds;
        } else {
            ++s.tally(CheckKind::andrica).fails;
            record_pair_fail(s, CheckKind::andrica, pair, 0, v.margin,
                             "nonpositive_margin");
        }
        uint64_t key = andrica_rank_key(pair);
        if (!s.max_andrica ||
            andrica_rank_less(s.max_andrica->pair, s.max_andrica->rank_key, pair,
                              key)) {
            s.max_andrica = AndricaExtreme{pair, key};
        }
    }

    if (checks.contains(CheckKind::brocard)) {
        IntervalVerdict v = brocard_check(pair);
        if (v.holds) {
            ++s.tally(CheckKind::brocard).holds;
        } else {
            ++s.tally(CheckKind::brocard).fails;
            record_pair_fail(s, CheckKind::brocard, pair, 0,
                             int64_t(v.witness_count), "fewer_than_4_primes");
        }
    }

    if (checks.contains(CheckKind::beyond_midpoint)) {
        uint64_t m = pair.midpoint();
        std::optional<ProbeOutcome> first_even;
        for (uint64_t mi = m + 1; mi < pair.p_hi; ++mi) {
            ProbeOutcome probe = beyond_midpoint_probe(pair, mi, &stats);
            if (!probe.is_odd) {
                first_even = probe;
                break;
            }
        }
        if (!first_even) {
            ++s.tally(CheckKind::beyond_midpoint).holds;
        } else {
            ++s.tally(CheckKind::beyond_midpoint).fails;
            record_pair_fail(s, CheckKind::beyond_midpoint, pair, first_even->mi,
                             int64_t(first_even->multiple),
                             "even_multiple_past_midpoint");
        }
    }
}

void scan_one_square(const ScanConfig& cfg, uint64_t n, RangeSummary& s) {
    const CheckSet& checks = cfg.checks;
    bool visited = false;

    if (checks.contains(CheckKind::legendre) && n >= 1) {
        visited = true;
        IntervalVerdict v = legendre_check(n);
        if (v.holds) {
            ++s.tally(CheckKind::legendre).holds;
        } else {
            ++s.tally(CheckKind::legendre).fails;
            record_square_fail(s, CheckKind::legendre, n, 0, "empty_square_window");
        }
        if (n >= 2) {
            // Local implication: when the gap after the largest prime
            // below N^2 is bounded by 2*sqrt(p), the window cannot be
            // empty. Cross-checked on every subject.
            uint64_t p = prev_prime(checked_square(n));
            u128 dist = u128(checked_square(n)) - p;
            if (dist * dist < u128(4) * p && !v.holds) {
                throw Error("internal invariant violated: bounded gap below N^2 "
                            "but empty window at N=" + std::to_string(n));
            }
        }
    }

    if (checks.contains(CheckKind::oppermann) && n >= 2) {
        visited = true;
        IntervalVerdict v = oppermann_check(n);
        if (v.holds) {
            ++s.tally(CheckKind::oppermann).holds;
        } else {
            ++s.tally(CheckKind::oppermann).fails;
            uint64_t lower = count_primes_open(n * (n - 1), n * n);
            record_square_fail(s, CheckKind::oppermann, n, int64_t(v.witness_count),
                               lower == 0 ? "lower_window_empty" : "upper_window_empty");
        }
    }

    if (visited) ++s.squares_checked;
}

RangeSummary scan_shard(const ScanConfig& cfg, const ShardPlan& plan) {
    RangeSummary s = empty_summary(cfg);
    if (plan.squares) {
        for (uint64_t n = plan.lo; n < plan.hi; ++n) scan_one_square(cfg, n, s);
    } else {
        ScanStats stats;
        PairStream stream(plan.lo, plan.hi);
        while (auto pair = stream.next()) scan_one_pair(cfg, *pair, s, stats);
        s.divisions = stats.divisions;
    }
    return s;
}

}  // namespace

std::vector<ShardRange> plan_shards(const ScanConfig& config) {
    ScanConfig cfg = normalized(config);
    return partition(cfg.range_lo, cfg.range_hi, cfg.shard_size);
}

RangeSummary run_scan(const ScanConfig& config, const EngineHooks* hooks) {
    ScanConfig cfg = normalized(config);
    std::string digest = config_digest(cfg);
    std::vector<ShardPlan> plans = plan_all(cfg);

    RangeSummary base = empty_summary(cfg);
    std::set<uint64_t> already_done;
    if (!cfg.checkpoint_path.empty() && cfg.resume) {
        std::ifstream probe(cfg.checkpoint_path);
        if (probe.good()) {
            probe.close();
            Checkpoint ck = checkpoint_load(cfg.checkpoint_path);
            if (ck.config_digest != digest) {
                throw UsageError("checkpoint belongs to a different scan "
                                 "(digest " + ck.config_digest + ", expected " +
                                 digest + ")");
            }
            for (uint64_t idx : ck.completed_shards) {
                if (idx >= plans.size()) {
                    throw UsageError("checkpoint lists shard " + std::to_string(idx) +
                                     " beyond plan size " + std::to_string(plans.size()));
                }
                already_done.insert(idx);
            }
            base = ck.partial_summary;
        }
    }

    std::vector<uint64_t> todo;
    for (uint64_t i = 0; i < plans.size(); ++i) {
        if (!already_done.count(i)) todo.push_back(i);
    }

    std::mutex mu;
    std::map<uint64_t, RangeSummary> results;  // ascending fold order
    std::set<uint64_t> done_now;
    std::atomic<uint64_t> next{0};
    std::atomic<bool> stop{false};
    std::exception_ptr failure;
    uint64_t failure_shard = UINT64_MAX;

    auto fold_partial = [&]() {
        RangeSummary partial = base;
        for (const auto& [idx, shard_summary] : results) {
            partial = merge_summaries(partial, shard_summary);
        }
        return partial;
    };

    auto run_one = [&](uint64_t idx) {
        RangeSummary shard_summary;
        try {
            shard_summary = scan_shard(cfg, plans[idx]);
        } catch (const CapacityError& e) {
            throw CapacityError("shard " + std::to_string(idx) + " [" +
                                std::to_string(plans[idx].lo) + ", " +
                                std::to_string(plans[idx].hi) + "): " + e.what());
        }

        std::lock_guard<std::mutex> lock(mu);
        results[idx] = std::move(shard_summary);
        done_now.insert(idx);
        if (!cfg.checkpoint_path.empty()) {
            Checkpoint ck;
            ck.config_digest = digest;
            ck.completed_shards.assign(already_done.begin(), already_done.end());
            ck.completed_shards.insert(ck.completed_shards.end(), done_now.begin(),
                                       done_now.end());
            std::sort(ck.completed_shards.begin(), ck.completed_shards.end());
            ck.partial_summary = fold_partial();
            checkpoint_save(ck, cfg.checkpoint_path);
        }
        if (hooks && hooks->on_shard_complete) {
            hooks->on_shard_complete(idx, already_done.size() + done_now.size(),
                                     plans.size());
        }
    };

    auto worker = [&]() {
        while (!stop.load(std::memory_order_relaxed)) {
            uint64_t slot = next.fetch_add(1);
            if (slot >= todo.size()) return;
            uint64_t idx = todo[slot];
            try {
                run_one(idx);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (idx < failure_shard) {
                    failure_shard = idx;
                    failure = std::current_exception();
                }
                stop.store(true, std::memory_order_relaxed);
                return;
            }
        }
    };

    uint64_t thread_count =
        std::min<uint64_t>(cfg.worker_count, std::max<size_t>(todo.size(), 1));
    if (thread_count <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(thread_count);
        for (uint64_t t = 0; t < thread_count; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    if (failure) std::rethrow_exception(failure);
    return fold_partial();
}

}  // namespace paritygap
