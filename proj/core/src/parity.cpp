#include "paritygap/parity.hpp"

namespace paritygap {

namespace {

void require_odd_prime_arg(uint64_t p) {
    if (p < 3 || p % 2 == 0) {
        throw DomainError("expected an odd modulus >= 3");
    }
}

int64_t narrow_margin(i128 v) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN)) {
        throw CapacityError("margin exceeds 64-bit range");
    }
    return int64_t(v);
}

}  // namespace

uint64_t largest_multiple(uint64_t p, uint64_t x, ScanStats* stats) {
    require_odd_prime_arg(p);
    require_within_limit(x, "largest_multiple bound");
    if (x < p) throw DomainError("largest_multiple: no multiple of p at or below x");
    if (stats) ++stats->divisions;
    return p * (x / p);
}

uint64_t closed_form_multiple(uint64_t p, uint64_t mi) {
    require_odd_prime_arg(p);
    if (mi <= p) throw DomainError("closed_form_multiple: mi must exceed p");
    return checked_mul(p, 2 * mi - p);
}

ParityVerdict parity_scan_pair(const PrimePair& pair, ScanStats& stats) {
    ParityVerdict v;
    v.pair = pair;
    uint64_t p = pair.p_lo;
    require_odd_prime_arg(p);
    uint64_t m = pair.midpoint();
    checked_square(m);  // capacity guard for the largest probe

    for (uint64_t mi = p + 1; mi <= m; ++mi) {
        uint64_t qt = mi * mi / p;
        ++stats.divisions;
        // p odd: L = p*qt has the parity of qt.
        if (v.parity_holds && qt % 2 == 0) {
            v.parity_holds = false;
            v.first_even_mi = mi;
        }
        if (v.identity_holds && qt != 2 * mi - p) {
            v.identity_holds = false;
            v.first_identity_violation_mi = mi;
        }
        if (!v.parity_holds && !v.identity_holds) break;
    }
    v.divergent = v.parity_holds != v.identity_holds;
    return v;
}

ProbeOutcome beyond_midpoint_probe(const PrimePair& pair, uint64_t mi,
                                   ScanStats* stats) {
    uint64_t m = pair.midpoint();
    if (mi <= m || mi >= pair.p_hi) {
        throw DomainError("beyond_midpoint_probe: mi must lie strictly between midpoint and p_hi");
    }
    ProbeOutcome out;
    out.mi = mi;
    out.multiple = largest_multiple(pair.p_lo, checked_square(mi), stats);
    out.is_odd = out.multiple % 2 == 1;
    return out;
}

bool lemma1_check(uint64_t a, uint64_t c) {
    if (a == 0 || c == 0) throw DomainError("lemma1_check: arguments must be positive");
    u128 prod4 = u128(4) * a * c;
    u128 sum = u128(a) + c;
    return prod4 < sum * sum;
}

Lemma2Verdict lemma2_check(const PrimePair& pair) {
    Lemma2Verdict v;
    v.midpoint_bound = u128(2) * pair.midpoint() - 1 < u128(3) * pair.p_lo;
    v.bertrand = u128(pair.p_hi) < u128(2) * pair.p_lo;
    return v;
}

uint64_t base_case_multiple(uint64_t p) {
    require_odd_prime_arg(p);
    uint64_t value = checked_mul(p, p + 2);
    u128 sq = u128(p) * p;
    u128 next_sq = u128(p + 1) * (p + 1);
    assert(sq < u128(value) && u128(value) < next_sq);
    (void)sq;
    (void)next_sq;
    assert(value == largest_multiple(p, checked_square(p + 1)));
    return value;
}

bool chain_check(uint64_t p, uint64_t mi) {
    require_odd_prime_arg(p);
    if (mi <= p) throw DomainError("chain_check: mi must exceed p");
    require_within_limit(mi, "chain_check mi");

    u128 mi_sq = u128(mi) * mi;
    u128 mid_link = u128(p) * (2 * u128(mi) - p) + p;
    u128 next_link = u128(p) * (2 * (u128(mi) + 1) - p);
    u128 next_sq = (u128(mi) + 1) * (u128(mi) + 1);

    bool chain = mi_sq < mid_link && mid_link < next_link && next_link < next_sq;
    // Equivalent small-offset form; the two must never disagree.
    uint64_t k = mi - p;
    assert(chain == (u128(k) * k < u128(p)));
    (void)k;
    return chain;
}

GapVerdict gap_bound_check(const PrimePair& pair) {
    GapVerdict v;
    v.pair = pair;

    uint64_t gap = pair.gap();
    i128 t1 = i128(4) * pair.p_lo - i128(gap) * gap;
    v.theorem1_margin = narrow_margin(t1);
    v.theorem1_holds = t1 > 0;
    assert(t1 != 0);  // 4p == gap^2 would make p a perfect square

    uint64_t m = pair.midpoint();
    i128 e14 = i128(u128(pair.p_lo) * (pair.p_hi + 1)) - i128(u128(m) * m);
    v.eq14_margin = narrow_margin(e14);
    v.eq14_holds = e14 > 0;
    return v;
}

}  // namespace paritygap
