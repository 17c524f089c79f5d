// Interval-prime predicates over pairs and square indices N, plus the
// machinery for ranking pairs by their square-root gap.
//
// Every verdict is an exact integer statement:
//   legendre   at least one prime strictly between N^2 and (N+1)^2
//   andrica    (gap - 1)^2 < 4 * p_lo, the integer form of
//              sqrt(p_hi) - sqrt(p_lo) < 1
//   brocard    at least 4 primes strictly between p_lo^2 and p_hi^2
//   oppermann  a prime in (N(N-1), N^2) and another in (N^2, N(N+1))
//
// Ranking pairs by sqrt(p_hi) - sqrt(p_lo) uses a Q32.32 fixed-point
// prefilter; any near-tie is settled by compare_sqrt_diff, which decides
// the order of two square-root differences in integers alone.

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "paritygap/checks.hpp"
#include "paritygap/primes.hpp"

namespace paritygap {

// Verdict for one named interval check on one subject.
struct IntervalVerdict {
    CheckKind kind = CheckKind::legendre;
    std::optional<PrimePair> pair;      // subject for andrica / brocard
    std::optional<uint64_t> index_n;    // subject for legendre / oppermann
    bool holds = false;
    uint64_t witness_count = 0;         // primes found, where applicable
    int64_t margin = 0;                 // exact slack, where applicable
};

// (N+1)^2 must stay within kLimit; N >= 1.
IntervalVerdict legendre_check(uint64_t n);

// Strictness is safe: (gap-1)^2 is odd and 4*p_lo is even, so equality
// cannot occur; a guard assertion enforces that.
IntervalVerdict andrica_check(const PrimePair& pair);

// p_hi^2 must stay within kLimit. Pairs are odd by construction; the
// pair (2, 3), whose interval (4, 9) holds only two primes, never
// reaches this check.
IntervalVerdict brocard_check(const PrimePair& pair);

// N(N+1) must stay within kLimit; N >= 2.
IntervalVerdict oppermann_check(uint64_t n);

// floor(sqrt(p_hi) * 2^32) - floor(sqrt(p_lo) * 2^32): a monotone
// fixed-point image of sqrt(p_hi) - sqrt(p_lo) with absolute error
// below 2^-31. Used only to rank candidates; order among keys within
// two units of each other is settled by compare_sqrt_diff.
uint64_t andrica_rank_key(const PrimePair& pair);

// Renders a rank key as the exact rational it encodes, "k/4294967296".
std::string rank_key_rational(uint64_t key);
std::optional<uint64_t> rank_key_from_rational(const std::string& text);

// Exact three-way comparison of sqrt(b) - sqrt(a) against
// sqrt(d) - sqrt(c), for 0 < a < b and 0 < c < d, all below 2^32.
// Returns -1, 0, or +1. Repeatedly isolates one radical and squares;
// the final stage is a 256-bit product comparison, so no rounding of
// any kind is involved.
int compare_sqrt_diff(uint64_t a, uint64_t b, uint64_t c, uint64_t d);

// Ranking order between two pairs: fixed-point keys first, exact
// comparison when the keys are within two units, ties broken towards
// the smaller p_lo. Returns true when lhs ranks strictly below rhs.
bool andrica_rank_less(const PrimePair& lhs, uint64_t lhs_key,
                       const PrimePair& rhs, uint64_t rhs_key);

}  // namespace paritygap
