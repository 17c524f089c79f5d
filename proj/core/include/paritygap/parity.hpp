// Per-pair predicates over a consecutive prime pair (p, q) with integer
// midpoint m = (p + q) / 2. All arithmetic is exact; every boolean is
// decided by integer comparison only.
//
// The central quantity is the largest multiple of p not exceeding x,
//   L(p, x) = p * floor(x / p),
// probed at x = mi^2 for each integer mi in (p, m]. Two predicates are
// tracked independently per mi:
//
//   parity    L(p, mi^2) is odd
//   identity  L(p, mi^2) equals the closed form p * (2*mi - p)
//
// Because p is odd, both reduce to the single quotient
// qt = floor(mi^2 / p): the multiple is odd iff qt is odd, and the
// identity holds iff qt == 2*mi - p. One division per mi decides both;
// that division count is the instrumented work measure of a scan.
//
// The two predicates are recorded separately on purpose: the identity
// implies parity (odd times odd), but the converse is not forced, and a
// subject where exactly one of them holds across the interval is flagged
// as divergent rather than assumed away.

#pragma once

#include <cstdint>
#include <optional>

#include "paritygap/checked_math.hpp"
#include "paritygap/primes.hpp"

namespace paritygap {

// Work counters carried through a scan. Divisions counts the quotient
// divisions performed by interval scans; the expected total over a
// range [3, X) is the sum of gap/2 over its pairs, about X/2.
struct ScanStats {
    uint64_t divisions = 0;
};

// Outcome of the parity / identity scan over (p_lo, midpoint].
struct ParityVerdict {
    PrimePair pair;
    bool parity_holds = true;
    std::optional<uint64_t> first_even_mi;
    bool identity_holds = true;
    std::optional<uint64_t> first_identity_violation_mi;
    bool divergent = false;  // exactly one of the two predicates holds
};

// Exact-margin outcome of the square-gap and midpoint-product bounds.
//   theorem1: gap^2 < 4 * p_lo          margin = 4*p_lo - gap^2
//   eq14:     midpoint^2 < p_lo*(p_hi+1) margin = p_lo*(p_hi+1) - midpoint^2
// theorem1_margin can never be zero: 4*p_lo == gap^2 would make the
// prime p_lo a perfect square.
struct GapVerdict {
    PrimePair pair;
    bool theorem1_holds = false;
    int64_t theorem1_margin = 0;
    bool eq14_holds = false;
    int64_t eq14_margin = 0;
};

// Both halves of the square-gap argument for a pair:
//   midpoint_bound: 2*midpoint - 1 < 3*p_lo
//   bertrand:       p_hi < 2*p_lo
struct Lemma2Verdict {
    bool midpoint_bound = false;
    bool bertrand = false;

    bool holds() const { return midpoint_bound && bertrand; }
};

// Result of probing one mi beyond the midpoint.
struct ProbeOutcome {
    uint64_t mi = 0;
    uint64_t multiple = 0;  // L(p_lo, mi^2)
    bool is_odd = false;
};

// L(p, x) = p * floor(x / p). p must be odd and >= 3; x >= p.
// Throws DomainError when x < p.
uint64_t largest_multiple(uint64_t p, uint64_t x, ScanStats* stats = nullptr);

// The closed-form candidate p * (2*mi - p), an odd integer whenever both
// factors are odd. Requires mi > p; throws DomainError otherwise.
uint64_t closed_form_multiple(uint64_t p, uint64_t mi);

// Scans every integer mi in (p_lo, midpoint], recording the first mi
// where the multiple is even and the first mi where the closed form
// misses, plus the divergence flag. One division per mi.
ParityVerdict parity_scan_pair(const PrimePair& pair, ScanStats& stats);

// Parity of L(p_lo, mi^2) for midpoint < mi < p_hi; demonstrates that
// the scanned interval is sharp. Throws DomainError outside that open
// interval.
ProbeOutcome beyond_midpoint_probe(const PrimePair& pair, uint64_t mi,
                                   ScanStats* stats = nullptr);

// 4*a*c < (a + c)^2 for positive a, c; the midpoint may be half-integral
// so the squared form avoids it. True exactly when a != c.
bool lemma1_check(uint64_t a, uint64_t c);

// The two inequalities bounding consecutive-square gaps below the
// midpoint square; both are theorems, so a false half signals a bug.
Lemma2Verdict lemma2_check(const PrimePair& pair);

// p * (p + 2) together with its sandwich p^2 < p(p+2) < (p+1)^2 and the
// cross-check against largest_multiple(p, (p+1)^2). p odd, >= 3.
uint64_t base_case_multiple(uint64_t p);

// The three-link induction chain at (p, mi):
//   mi^2 < p(2mi - p) + p < p(2(mi+1) - p) < (mi + 1)^2
// evaluated literally. Algebraically equivalent to (mi - p)^2 < p.
// Requires mi > p.
bool chain_check(uint64_t p, uint64_t mi);

// Fills a GapVerdict with exact integer margins. Square-compares only;
// no roots are taken anywhere.
GapVerdict gap_bound_check(const PrimePair& pair);

}  // namespace paritygap
