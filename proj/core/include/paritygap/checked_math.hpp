// Exact integer arithmetic helpers.
//
// Every predicate in this library is decided in integer arithmetic only.
// Raw inputs are capped at kLimit = 2^62 so that squares and the products
// appearing in the bound checks stay representable in 128-bit
// intermediates. Floating point appears in exactly one place: as the
// seed of the integer square root, whose result is corrected to the
// exact floor before use.

#pragma once

#include <cassert>
#include <cmath>
#include <cstdint>
#include <string>

#include "paritygap/errors.hpp"

namespace paritygap {

using u128 = unsigned __int128;
using i128 = __int128;

// Largest raw integer the library accepts (primes, squares, window ends).
inline constexpr uint64_t kLimit = uint64_t{1} << 62;

inline void require_within_limit(uint64_t n, const char* what) {
    if (n > kLimit) {
        throw CapacityError(std::string(what) + " exceeds supported limit 2^62");
    }
}

// a*b with an overflow check against kLimit.
inline uint64_t checked_mul(uint64_t a, uint64_t b) {
    u128 p = u128(a) * b;
    if (p > kLimit) throw CapacityError("product exceeds supported limit 2^62");
    return uint64_t(p);
}

inline uint64_t checked_square(uint64_t a) { return checked_mul(a, a); }

// floor(sqrt(n)), exact. The hardware sqrt only seeds the result;
// the correction loops land on the true floor.
inline uint64_t isqrt(uint64_t n) {
    uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && u128(r) * r > n) --r;
    while (u128(r + 1) * (r + 1) <= n) ++r;
    return r;
}

// floor(sqrt(n)) for 128-bit n. Used by the fixed-point rank key.
inline uint64_t isqrt_u128(u128 n) {
    uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<long double>(n)));
    // Guard against seed overshoot near the top of the range.
    while (r > 0 && u128(r) * r > n) --r;
    while (u128(r + 1) * (r + 1) <= n) ++r;
    return r;
}

// 256-bit product of two 128-bit values, limb-split for exact compares.
struct U256 {
    uint64_t limb[4];  // little endian

    friend bool operator==(const U256& a, const U256& b) {
        return a.limb[0] == b.limb[0] && a.limb[1] == b.limb[1] &&
               a.limb[2] == b.limb[2] && a.limb[3] == b.limb[3];
    }
    friend bool operator<(const U256& a, const U256& b) {
        for (int i = 3; i >= 0; --i) {
            if (a.limb[i] != b.limb[i]) return a.limb[i] < b.limb[i];
        }
        return false;
    }
};

inline U256 mul_u128(u128 a, u128 b) {
    uint64_t a0 = uint64_t(a), a1 = uint64_t(a >> 64);
    uint64_t b0 = uint64_t(b), b1 = uint64_t(b >> 64);
    u128 p00 = u128(a0) * b0;
    u128 p01 = u128(a0) * b1;
    u128 p10 = u128(a1) * b0;
    u128 p11 = u128(a1) * b1;

    U256 r{};
    r.limb[0] = uint64_t(p00);
    u128 carry = (p00 >> 64) + uint64_t(p01) + uint64_t(p10);
    r.limb[1] = uint64_t(carry);
    carry = (carry >> 64) + (p01 >> 64) + (p10 >> 64) + uint64_t(p11);
    r.limb[2] = uint64_t(carry);
    r.limb[3] = uint64_t((carry >> 64) + (p11 >> 64));
    return r;
}

// -1 / 0 / +1 comparison of a*b versus c*d over 128-bit factors.
inline int cmp_products_u128(u128 a, u128 b, u128 c, u128 d) {
    U256 lhs = mul_u128(a, b);
    U256 rhs = mul_u128(c, d);
    if (lhs < rhs) return -1;
    if (rhs < lhs) return 1;
    return 0;
}

// Sign of c + k*sqrt(r), decided exactly. r >= 0; c, k any sign.
// Requires |k| < 2^64 so that k^2 stays within 128 bits.
inline int sign_affine_sqrt(i128 c, i128 k, u128 r) {
    if (k == 0 || r == 0) return c > 0 ? 1 : (c < 0 ? -1 : 0);
    if (k < 0) return -sign_affine_sqrt(-c, -k, r);
    if (c >= 0) return 1;  // both terms positive
    u128 ku = u128(k);
    assert(ku >> 64 == 0);
    u128 cu = u128(-c);
    // c + k*sqrt(r) vs 0  ==  k^2 * r vs c^2
    U256 lhs = mul_u128(ku * ku, r);
    U256 rhs = mul_u128(cu, cu);
    if (rhs < lhs) return 1;
    if (lhs < rhs) return -1;
    return 0;
}

// FNV-1a 64-bit, used for config and checkpoint digests.
inline uint64_t fnv1a64(const std::string& data) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::string to_hex(uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

}  // namespace paritygap
