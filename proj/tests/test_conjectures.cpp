#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "paritygap/conjectures.hpp"
#include "paritygap/parity.hpp"
#include "paritygap/primes.hpp"

using namespace paritygap;

namespace {

uint64_t oracle_primes_between(uint64_t lo, uint64_t hi) {
    uint64_t n = 0;
    for (uint64_t x = lo + 1; x < hi; ++x) n += pgtest::trial_division_prime(x);
    return n;
}

}  // namespace

TEST_CASE("legendre: a prime between consecutive squares") {
    IntervalVerdict v1 = legendre_check(1);
    CHECK(v1.holds);
    CHECK(v1.witness_count == 2);  // 2 and 3 between 1 and 4
    CHECK(v1.index_n == 1);
    CHECK_FALSE(v1.pair.has_value());

    uint64_t expected[] = {0, 2, 2, 2, 3, 2, 4, 3};  // N = 1..7
    for (uint64_t n = 1; n <= 7; ++n) {
        CHECK(legendre_check(n).witness_count == expected[n]);
    }

    CHECK_THROWS_AS(legendre_check(0), DomainError);
    CHECK_THROWS_AS(legendre_check(uint64_t(1) << 32), CapacityError);

    for (uint64_t n = 1; n <= 400; ++n) {
        IntervalVerdict v = legendre_check(n);
        CHECK(v.witness_count == oracle_primes_between(n * n, (n + 1) * (n + 1)));
        CHECK(v.holds);
    }
}

TEST_CASE("andrica margin is 4*p_lo - (gap-1)^2, odd and positive so far") {
    CHECK(andrica_check({3, 5}).margin == 11);
    CHECK(andrica_check({23, 29}).margin == 67);
    CHECK(andrica_check({113, 127}).margin == 283);
    CHECK(andrica_check({3, 5}).holds);

    for_each_pair(3, 100000, [&](const PrimePair& pair) {
        IntervalVerdict v = andrica_check(pair);
        CHECK(v.holds);
        CHECK(v.margin > 0);
        CHECK(v.margin % 2 == 1);  // even minus odd square: never a tie
        uint64_t g = pair.gap();
        CHECK(v.margin == int64_t(4 * pair.p_lo) - int64_t((g - 1) * (g - 1)));
    });
}

TEST_CASE("the squared gap bound implies andrica with slack 2*gap - 1") {
    for_each_pair(3, 100000, [&](const PrimePair& pair) {
        GapVerdict g = gap_bound_check(pair);
        IntervalVerdict a = andrica_check(pair);
        CHECK(a.margin == g.theorem1_margin + int64_t(2 * pair.gap()) - 1);
        if (g.theorem1_holds) CHECK(a.holds);
    });
}

TEST_CASE("brocard: at least four primes between squared pair endpoints") {
    IntervalVerdict v35 = brocard_check({3, 5});
    CHECK(v35.holds);
    CHECK(v35.witness_count == 5);  // 11, 13, 17, 19, 23 in (9, 25)

    IntervalVerdict v57 = brocard_check({5, 7});
    CHECK(v57.holds);
    CHECK(v57.witness_count == 6);  // 29, 31, 37, 41, 43, 47 in (25, 49)

    for_each_pair(3, 200, [&](const PrimePair& pair) {
        IntervalVerdict v = brocard_check(pair);
        CHECK(v.witness_count ==
              oracle_primes_between(pair.p_lo * pair.p_lo, pair.p_hi * pair.p_hi));
        CHECK(v.holds);
    });
}

TEST_CASE("oppermann: primes on both sides of every square") {
    IntervalVerdict v2 = oppermann_check(2);
    CHECK(v2.holds);
    CHECK(v2.witness_count == 1);  // 3 in (2, 4); 5 in (4, 6)

    IntervalVerdict v3 = oppermann_check(3);
    CHECK(v3.holds);
    CHECK(v3.witness_count == 1);  // 7 in (6, 9); 11 in (9, 12)

    CHECK_THROWS_AS(oppermann_check(1), DomainError);
    CHECK_THROWS_AS(oppermann_check(0), DomainError);

    for (uint64_t n = 2; n <= 400; ++n) {
        IntervalVerdict v = oppermann_check(n);
        uint64_t lower = oracle_primes_between(n * (n - 1), n * n);
        uint64_t upper = oracle_primes_between(n * n, n * (n + 1));
        CHECK(v.holds == (lower >= 1 && upper >= 1));
        CHECK(v.witness_count == std::min(lower, upper));
        CHECK(v.holds);
    }
}

TEST_CASE("rank keys are floor(2^32 * sqrt) differences") {
    CHECK(andrica_rank_key({7, 11}) == 2881379653ULL);
    CHECK(rank_key_rational(2881379653ULL) == "2881379653/4294967296");
    CHECK(rank_key_from_rational("2881379653/4294967296") == 2881379653ULL);
    CHECK_FALSE(rank_key_from_rational("2881379653/4294967295").has_value());
    CHECK_FALSE(rank_key_from_rational("no-slash").has_value());
    CHECK_FALSE(rank_key_from_rational("x/4294967296").has_value());
    CHECK_THROWS_AS(andrica_rank_key({3, uint64_t(1) << 32}), CapacityError);

    std::mt19937_64 rng(139);
    for (int i = 0; i < 2000; ++i) {
        uint64_t p = 3 + rng() % 1000000;
        uint64_t q = p + 2 + rng() % 1000;
        uint64_t key = andrica_rank_key({p, q});
        CHECK(key == pgtest::bigint_fixed_sqrt(q, 32) - pgtest::bigint_fixed_sqrt(p, 32));
        CHECK(rank_key_from_rational(rank_key_rational(key)) == key);
    }
}

TEST_CASE("compare_sqrt_diff decides exactly, including true ties") {
    CHECK(compare_sqrt_diff(2, 8, 8, 18) == 0);    // sqrt2 = sqrt2
    CHECK(compare_sqrt_diff(3, 27, 12, 48) == 0);  // 2*sqrt3 both
    CHECK(compare_sqrt_diff(5, 45, 20, 80) == 0);  // 2*sqrt5 both
    CHECK(compare_sqrt_diff(23, 29, 23, 29) == 0);
    CHECK(compare_sqrt_diff(113, 127, 23, 29) == 1);
    CHECK(compare_sqrt_diff(23, 29, 113, 127) == -1);
    CHECK(compare_sqrt_diff(7, 11, 113, 127) == 1);
    CHECK_THROWS_AS(compare_sqrt_diff(0, 5, 2, 3), DomainError);
    CHECK_THROWS_AS(compare_sqrt_diff(5, 5, 2, 3), DomainError);
    CHECK_THROWS_AS(compare_sqrt_diff(2, uint64_t(1) << 32, 2, 3), CapacityError);
}

TEST_CASE("compare_sqrt_diff agrees with a big-integer comparator") {
    std::mt19937_64 rng(149);
    for (int i = 0; i < 50000; ++i) {
        uint64_t a = 1 + rng() % 4000000000ULL;
        uint64_t b = a + 1 + rng() % 100000;
        uint64_t c = 1 + rng() % 4000000000ULL;
        uint64_t d = c + 1 + rng() % 100000;
        int got = compare_sqrt_diff(a, b, c, d);
        CHECK(got == pgtest::bigint_sqrt_diff_compare(a, b, c, d));
        CHECK(got == -compare_sqrt_diff(c, d, a, b));
    }
    // Deliberately near-tied inputs: scaled copies of one difference,
    // then nudged by one.
    for (int i = 0; i < 20000; ++i) {
        uint64_t r = 2 + rng() % 50;
        uint64_t al = 1 + rng() % 40, bl = al + 1 + rng() % 40;
        uint64_t k = 1 + rng() % 30;
        uint64_t a = al * al * r, b = bl * bl * r;
        uint64_t c = al * al * k * k * r, d = bl * bl * k * k * r;
        // The (c, d) difference is k times the (a, b) one: a tie at
        // k == 1, strictly larger for every k > 1.
        int got = compare_sqrt_diff(a, b, c, d);
        CHECK(got == pgtest::bigint_sqrt_diff_compare(a, b, c, d));
        CHECK(got == (k == 1 ? 0 : -1));
        int nudged = compare_sqrt_diff(a, b, c + 1, d);
        CHECK(nudged == pgtest::bigint_sqrt_diff_compare(a, b, c + 1, d));
    }
}

TEST_CASE("rank ordering: keys decide when far, exact comparison when near") {
    uint64_t k23 = andrica_rank_key({23, 29});
    uint64_t k113 = andrica_rank_key({113, 127});
    uint64_t k7 = andrica_rank_key({7, 11});

    CHECK(andrica_rank_less({23, 29}, k23, {113, 127}, k113));
    CHECK_FALSE(andrica_rank_less({113, 127}, k113, {23, 29}, k23));
    CHECK(andrica_rank_less({113, 127}, k113, {7, 11}, k7));
    CHECK_FALSE(andrica_rank_less({7, 11}, k7, {113, 127}, k113));
    CHECK_FALSE(andrica_rank_less({23, 29}, k23, {23, 29}, k23));

    // Agreement between the key prefilter and the exact comparator
    // whenever the keys are far enough apart to decide alone.
    std::mt19937_64 rng(151);
    for (int i = 0; i < 20000; ++i) {
        uint64_t p1 = 3 + rng() % 100000;
        uint64_t q1 = p1 + 2 + 2 * (rng() % 40);
        uint64_t p2 = 3 + rng() % 100000;
        uint64_t q2 = p2 + 2 + 2 * (rng() % 40);
        uint64_t key1 = andrica_rank_key({p1, q1});
        uint64_t key2 = andrica_rank_key({p2, q2});
        uint64_t delta = key1 > key2 ? key1 - key2 : key2 - key1;
        if (delta > 2) {
            int exact = compare_sqrt_diff(p1, q1, p2, q2);
            CHECK((key1 < key2) == (exact < 0));
            CHECK(andrica_rank_less({p1, q1}, key1, {p2, q2}, key2) == (key1 < key2));
        }
    }
}

TEST_CASE("every pair with p_lo in [13, 2000) ranks below (113, 127)") {
    PrimePair top{113, 127};
    uint64_t top_key = andrica_rank_key(top);
    for_each_pair(13, 2000, [&](const PrimePair& pair) {
        if (pair == top) return;
        CHECK(andrica_rank_less(pair, andrica_rank_key(pair), top, top_key));
    });
    // Of the pairs below 13, only (7, 11) outranks it.
    CHECK(andrica_rank_less(top, top_key, {7, 11}, andrica_rank_key({7, 11})));
    CHECK(andrica_rank_less({3, 5}, andrica_rank_key({3, 5}), top, top_key));
    CHECK(andrica_rank_less({5, 7}, andrica_rank_key({5, 7}), top, top_key));
    CHECK(andrica_rank_less({11, 13}, andrica_rank_key({11, 13}), top, top_key));
}
