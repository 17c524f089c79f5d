// Prime substrate: segmented sieve windows, consecutive-pair streaming,
// open-interval prime counts, and a deterministic point primality test.
//
// All window operations share one growing cache of base primes and are
// safe to call concurrently; sieving distinct segments needs no
// coordination.
//
// Pair enumeration covers consecutive primes >= 3 only. The pair (2, 3)
// is excluded everywhere: its midpoint is not an integer and every
// downstream predicate presumes two odd endpoints.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "paritygap/checked_math.hpp"
#include "paritygap/errors.hpp"

namespace paritygap {

// Widest window sieve_segment accepts, in numbers (not bits).
inline constexpr uint64_t kMaxSegmentWidth = uint64_t{1} << 25;

// Streaming width used by PairStream and count_primes_open:
// 2^20 odd entries per segment, cache resident.
inline constexpr uint64_t kDefaultSegmentWidth = uint64_t{1} << 21;

// Two consecutive primes >= 3 with their even gap and integer midpoint.
struct PrimePair {
    uint64_t p_lo = 0;
    uint64_t p_hi = 0;

    uint64_t gap() const { return p_hi - p_lo; }
    uint64_t midpoint() const { return p_lo + gap() / 2; }

    friend bool operator==(const PrimePair&, const PrimePair&) = default;
};

// Primality flags for [lo, hi). Storage is one bit per odd number;
// 2 is carried as a side flag, other evens are composite by fiat.
class PrimeWindow {
public:
    PrimeWindow() = default;

    uint64_t lo() const { return lo_; }
    uint64_t hi() const { return hi_; }

    // n must lie in [lo, hi).
    bool is_prime(uint64_t n) const {
        assert(n >= lo_ && n < hi_);
        if (n % 2 == 0) return n == 2;
        if (n < 3) return false;  // n == 1
        uint64_t idx = (n - odd_base_) / 2;
        return (bits_[idx >> 6] >> (idx & 63)) & 1;
    }

    // Visits primes in [lo, hi) in increasing order.
    template <class F>
    void for_each_prime(F&& fn) const {
        if (lo_ <= 2 && 2 < hi_) fn(uint64_t{2});
        for (size_t w = 0; w < bits_.size(); ++w) {
            uint64_t word = bits_[w];
            while (word) {
                int b = __builtin_ctzll(word);
                word &= word - 1;
                fn(odd_base_ + 2 * (uint64_t(w) * 64 + uint64_t(b)));
            }
        }
    }

    uint64_t count_primes() const {
        uint64_t n = (lo_ <= 2 && 2 < hi_) ? 1 : 0;
        for (uint64_t w : bits_) n += uint64_t(__builtin_popcountll(w));
        return n;
    }

private:
    friend PrimeWindow sieve_segment(uint64_t lo, uint64_t hi);

    uint64_t lo_ = 0;
    uint64_t hi_ = 0;
    uint64_t odd_base_ = 1;  // first odd >= lo; bit j <=> odd_base + 2j
    std::vector<uint64_t> bits_;
};

// Snapshot of all primes <= at least `n`, grown on demand.
// Thread safe: readers take an immutable shared snapshot.
std::shared_ptr<const std::vector<uint32_t>> base_primes_upto(uint64_t n);

// Exact primality flags for [lo, hi).
// Throws UsageError when lo >= hi, CapacityError when hi > kLimit or the
// window is wider than kMaxSegmentWidth.
PrimeWindow sieve_segment(uint64_t lo, uint64_t hi);

// Number of primes q with a < q < b (open on both ends). a <= b required.
uint64_t count_primes_open(uint64_t a, uint64_t b);

// Deterministic primality for any n <= kLimit. No probabilistic answers:
// the witness set decides every 64-bit integer exactly.
bool is_prime(uint64_t n);

// Smallest prime > n / largest prime < n. next_prime throws CapacityError
// if the answer would exceed kLimit; prev_prime throws DomainError for n <= 2.
uint64_t next_prime(uint64_t n);
uint64_t prev_prime(uint64_t n);

// Streams every PrimePair whose p_lo lies in [lo, hi), in increasing
// order. The final pair's p_hi is located by sieve look-ahead even when
// it falls at or beyond hi, so shards partitioned by p_lo ownership
// reproduce exactly the unsharded pair sequence.
class PairStream {
public:
    PairStream(uint64_t lo, uint64_t hi,
               uint64_t segment_width = kDefaultSegmentWidth);

    std::optional<PrimePair> next();

private:
    void advance_window();
    std::optional<uint64_t> next_prime_in_stream();

    uint64_t hi_;             // p_lo ownership bound
    uint64_t segment_width_;
    uint64_t cursor_;         // next value to examine
    std::optional<uint64_t> pending_;  // prime awaiting its successor
    bool done_ = false;
    PrimeWindow window_;
    std::vector<uint64_t> window_primes_;
    size_t window_pos_ = 0;
};

// Convenience wrapper over PairStream.
template <class F>
void for_each_pair(uint64_t lo, uint64_t hi, F&& fn) {
    PairStream stream(lo, hi);
    while (auto pair = stream.next()) fn(*pair);
}

// Smallest pair with p_lo >= n, or nullopt if p_lo would exceed kLimit.
std::optional<PrimePair> pair_at(uint64_t n);

}  // namespace paritygap
