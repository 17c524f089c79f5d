#include "paritygap/conjectures.hpp"

#include <algorithm>
#include <charconv>

namespace paritygap {

namespace {

int64_t narrow_margin(i128 v) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN)) {
        throw CapacityError("margin exceeds 64-bit range");
    }
    return int64_t(v);
}

constexpr uint64_t kRankDenominator = uint64_t{1} << 32;

}  // namespace

IntervalVerdict legendre_check(uint64_t n) {
    if (n < 1) throw DomainError("legendre_check: N must be >= 1");
    uint64_t lo = checked_square(n);
    uint64_t hi = checked_square(n + 1);
    IntervalVerdict v;
    v.kind = CheckKind::legendre;
    v.index_n = n;
    v.witness_count = count_primes_open(lo, hi);
    v.holds = v.witness_count >= 1;
    return v;
}

IntervalVerdict andrica_check(const PrimePair& pair) {
    IntervalVerdict v;
    v.kind = CheckKind::andrica;
    v.pair = pair;
    uint64_t g = pair.gap();
    i128 margin = i128(4) * pair.p_lo - i128(g - 1) * (g - 1);
    assert(margin != 0);  // odd square cannot equal 4 * p_lo
    v.margin = narrow_margin(margin);
    v.holds = margin > 0;
    v.witness_count = 0;
    return v;
}

IntervalVerdict brocard_check(const PrimePair& pair) {
    IntervalVerdict v;
    v.kind = CheckKind::brocard;
    v.pair = pair;
    uint64_t lo = checked_square(pair.p_lo);
    uint64_t hi = checked_square(pair.p_hi);
    v.witness_count = count_primes_open(lo, hi);
    v.holds = v.witness_count >= 4;
    return v;
}

IntervalVerdict oppermann_check(uint64_t n) {
    if (n < 2) throw DomainError("oppermann_check: N must be >= 2");
    uint64_t sq = checked_square(n);
    uint64_t below = checked_mul(n, n - 1);
    uint64_t above = checked_mul(n, n + 1);
    IntervalVerdict v;
    v.kind = CheckKind::oppermann;
    v.index_n = n;
    uint64_t lower = count_primes_open(below, sq);
    uint64_t upper = count_primes_open(sq, above);
    v.witness_count = std::min(lower, upper);
    v.holds = lower >= 1 && upper >= 1;
    return v;
}

uint64_t andrica_rank_key(const PrimePair& pair) {
    if (pair.p_hi >= (uint64_t{1} << 32)) {
        throw CapacityError("andrica_rank_key: pair endpoints must be below 2^32");
    }
    uint64_t hi_fix = isqrt_u128(u128(pair.p_hi) << 64);
    uint64_t lo_fix = isqrt_u128(u128(pair.p_lo) << 64);
    return hi_fix - lo_fix;
}

std::string rank_key_rational(uint64_t key) {
    return std::to_string(key) + "/" + std::to_string(kRankDenominator);
}

std::optional<uint64_t> rank_key_from_rational(const std::string& text) {
    size_t slash = text.find('/');
    if (slash == std::string::npos) return std::nullopt;
    if (text.substr(slash + 1) != std::to_string(kRankDenominator)) return std::nullopt;
    uint64_t key = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + slash, key);
    if (ec != std::errc{} || ptr != text.data() + slash) return std::nullopt;
    return key;
}

int compare_sqrt_diff(uint64_t a, uint64_t b, uint64_t c, uint64_t d) {
    if (a == 0 || a >= b || c == 0 || c >= d) {
        throw DomainError("compare_sqrt_diff: need 0 < a < b and 0 < c < d");
    }
    if (b >= (uint64_t{1} << 32) || d >= (uint64_t{1} << 32)) {
        throw CapacityError("compare_sqrt_diff: inputs must be below 2^32");
    }
    // sqrt(b) - sqrt(a)  vs  sqrt(d) - sqrt(c)
    //   ==  sqrt(b) + sqrt(c)  vs  sqrt(d) + sqrt(a)
    // Squaring both positive sides leaves
    //   t0 + 2*sqrt(u)  vs  2*sqrt(v)
    // with t0 = (b + c) - (d + a), u = b*c, v = a*d.
    i128 t0 = i128(b) + i128(c) - i128(d) - i128(a);
    u128 u = u128(b) * c;
    u128 v = u128(a) * d;

    int lhs_sign = sign_affine_sqrt(t0, 2, u);
    if (lhs_sign < 0) return -1;          // negative vs non-negative
    if (lhs_sign == 0) return v ? -1 : 0;  // zero vs positive

    // Both sides non-negative: square once more.
    //   (t0 + 2*sqrt(u))^2 vs 4v  ==  (t0^2 + 4u - 4v) + 4*t0*sqrt(u) vs 0
    i128 c2 = t0 * t0 + i128(4) * i128(u) - i128(4) * i128(v);
    return sign_affine_sqrt(c2, 4 * t0, u);
}

bool andrica_rank_less(const PrimePair& lhs, uint64_t lhs_key,
                       const PrimePair& rhs, uint64_t rhs_key) {
    uint64_t delta = lhs_key > rhs_key ? lhs_key - rhs_key : rhs_key - lhs_key;
    if (delta > 2) return lhs_key < rhs_key;
    int exact = compare_sqrt_diff(lhs.p_lo, lhs.p_hi, rhs.p_lo, rhs.p_hi);
    if (exact != 0) return exact < 0;
    // Equal differences only happen for identical pairs; order by p_lo
    // so the tie-break is still total.
    return rhs.p_lo < lhs.p_lo;
}

}  // namespace paritygap
