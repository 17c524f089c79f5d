#include "paritygap/primes.hpp"

#include <algorithm>
#include <mutex>

namespace paritygap {

namespace {

// Simple odd-only sieve for the base prime cache.
std::vector<uint32_t> sieve_small(uint64_t limit) {
    std::vector<uint32_t> primes;
    if (limit >= 2) primes.push_back(2);
    if (limit < 3) return primes;

    uint64_t entries = (limit - 1) / 2;  // odd numbers 3, 5, ..., <= limit
    std::vector<uint64_t> bits((entries + 63) / 64, ~uint64_t{0});
    auto clear_bit = [&](uint64_t idx) { bits[idx >> 6] &= ~(uint64_t{1} << (idx & 63)); };
    auto test_bit = [&](uint64_t idx) { return (bits[idx >> 6] >> (idx & 63)) & 1; };

    for (uint64_t i = 0; i < entries; ++i) {
        uint64_t p = 2 * i + 3;
        if (p * p > limit) break;
        if (!test_bit(i)) continue;
        for (uint64_t m = p * p; m <= limit; m += 2 * p) clear_bit((m - 3) / 2);
    }
    for (uint64_t i = 0; i < entries; ++i) {
        if (test_bit(i)) primes.push_back(uint32_t(2 * i + 3));
    }
    return primes;
}

std::mutex g_base_mutex;
std::shared_ptr<const std::vector<uint32_t>> g_base_primes;
uint64_t g_base_limit = 0;

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return uint64_t(u128(a) * b % m);
}

uint64_t powmod(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool miller_rabin_composite(uint64_t n, uint64_t a, uint64_t d, int r) {
    uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < r; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;
}

}  // namespace

std::shared_ptr<const std::vector<uint32_t>> base_primes_upto(uint64_t n) {
    std::lock_guard<std::mutex> lock(g_base_mutex);
    if (!g_base_primes || g_base_limit < n) {
        uint64_t target = std::max<uint64_t>(std::max(n, 2 * g_base_limit), 1 << 16);
        g_base_primes = std::make_shared<const std::vector<uint32_t>>(sieve_small(target));
        g_base_limit = target;
    }
    return g_base_primes;
}

PrimeWindow sieve_segment(uint64_t lo, uint64_t hi) {
    if (lo >= hi) throw UsageError("sieve_segment: lo must be below hi");
    require_within_limit(hi, "sieve_segment window end");
    if (hi - lo > kMaxSegmentWidth) {
        throw CapacityError("sieve_segment: window wider than supported segment size");
    }

    PrimeWindow w;
    w.lo_ = lo;
    w.hi_ = hi;
    w.odd_base_ = lo | 1;
    uint64_t entries = w.odd_base_ < hi ? (hi - w.odd_base_ + 1) / 2 : 0;
    w.bits_.assign((entries + 63) / 64, ~uint64_t{0});
    if (entries == 0) return w;

    // Trailing bits beyond `entries` stay zero so popcounts are exact.
    uint64_t tail = entries & 63;
    if (tail) w.bits_.back() = (uint64_t{1} << tail) - 1;

    auto clear_bit = [&](uint64_t idx) { w.bits_[idx >> 6] &= ~(uint64_t{1} << (idx & 63)); };

    if (w.odd_base_ == 1) clear_bit(0);

    uint64_t root = isqrt(hi - 1);
    auto base = base_primes_upto(root);
    for (uint32_t p : *base) {
        if (p == 2) continue;
        u128 p2 = u128(p) * p;
        if (p2 >= hi) break;
        uint64_t first = std::max<uint64_t>(uint64_t(p2), ((lo + p - 1) / p) * p);
        if (first % 2 == 0) first += p;
        for (uint64_t m = first; m < hi; m += 2 * uint64_t(p)) {
            clear_bit((m - w.odd_base_) / 2);
        }
    }
    return w;
}

uint64_t count_primes_open(uint64_t a, uint64_t b) {
    if (a > b) throw UsageError("count_primes_open: a must not exceed b");
    require_within_limit(b, "count_primes_open bound");
    if (b - a < 2) return 0;

    uint64_t count = 0;
    uint64_t lo = a + 1;
    while (lo < b) {
        uint64_t hi = std::min(b, lo + kDefaultSegmentWidth);
        count += sieve_segment(lo, hi).count_primes();
        lo = hi;
    }
    return count;
}

bool is_prime(uint64_t n) {
    require_within_limit(n, "is_prime argument");
    if (n < 2) return false;
    for (uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    // Deterministic witness set for every n < 2^64.
    uint64_t d = n - 1;
    int r = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++r;
    }
    for (uint64_t a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL,
                       1795265022ULL}) {
        uint64_t w = a % n;
        if (w == 0) continue;
        if (miller_rabin_composite(n, w, d, r)) return false;
    }
    return true;
}

uint64_t next_prime(uint64_t n) {
    uint64_t c = n < 2 ? 2 : n + 1;
    if (c == 2) return 2;
    if (c % 2 == 0) ++c;
    for (;; c += 2) {
        require_within_limit(c, "next_prime candidate");
        if (is_prime(c)) return c;
    }
}

uint64_t prev_prime(uint64_t n) {
    if (n <= 2) throw DomainError("prev_prime: no prime below 2");
    if (n == 3) return 2;
    uint64_t c = (n % 2 == 0) ? n - 1 : n - 2;
    for (; c >= 3; c -= 2) {
        if (is_prime(c)) return c;
    }
    return 2;
}

PairStream::PairStream(uint64_t lo, uint64_t hi, uint64_t segment_width)
    : hi_(hi), segment_width_(segment_width), cursor_(std::max<uint64_t>(lo, 3)) {
    if (lo >= hi) throw UsageError("PairStream: lo must be below hi");
    require_within_limit(hi, "PairStream range end");
    if (segment_width_ < 2) segment_width_ = 2;
    if (segment_width_ > kMaxSegmentWidth) segment_width_ = kMaxSegmentWidth;
    if (cursor_ >= hi_) done_ = true;
}

void PairStream::advance_window() {
    uint64_t lo = cursor_;
    uint64_t hi = std::min(lo + segment_width_, kLimit);
    if (lo >= hi) throw CapacityError("PairStream: ran past supported limit");
    window_ = sieve_segment(lo, hi);
    window_primes_.clear();
    window_.for_each_prime([&](uint64_t p) { window_primes_.push_back(p); });
    window_pos_ = 0;
    cursor_ = hi;
}

std::optional<uint64_t> PairStream::next_prime_in_stream() {
    while (true) {
        if (window_pos_ < window_primes_.size()) return window_primes_[window_pos_++];
        if (cursor_ >= kLimit) return std::nullopt;
        advance_window();
    }
}

std::optional<PrimePair> PairStream::next() {
    if (done_) return std::nullopt;
    while (true) {
        auto p = next_prime_in_stream();
        if (!p) {
            done_ = true;
            return std::nullopt;
        }
        if (!pending_) {
            if (*p >= hi_) {
                done_ = true;
                return std::nullopt;
            }
            pending_ = *p;
            continue;
        }
        PrimePair pair{*pending_, *p};
        if (*p < hi_) {
            pending_ = *p;
        } else {
            done_ = true;
        }
        return pair;
    }
}

std::optional<PrimePair> pair_at(uint64_t n) {
    uint64_t lo = std::max<uint64_t>(n, 3);
    while (lo < kLimit) {
        uint64_t hi = std::min(lo + kDefaultSegmentWidth, kLimit);
        PairStream stream(lo, hi);
        if (auto pair = stream.next()) return pair;
        lo = hi;
    }
    return std::nullopt;
}

}  // namespace paritygap
