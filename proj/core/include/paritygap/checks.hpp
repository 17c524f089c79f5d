// Check vocabulary shared by the engine, the reports, and the CLI.
// Token strings are the stable external names used by --check lists,
// report keys, and counterexample records.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "paritygap/errors.hpp"

namespace paritygap {

enum class CheckKind : uint8_t {
    parity,
    identity,
    lemma1,
    lemma2,
    chain,
    theorem1,
    eq14,
    legendre,
    andrica,
    brocard,
    oppermann,
    beyond_midpoint,
};

inline constexpr size_t kCheckCount = 12;

std::string_view check_token(CheckKind kind);
std::optional<CheckKind> check_from_token(std::string_view token);

// legendre and oppermann walk square indices N; everything else walks
// consecutive prime pairs.
inline bool is_square_check(CheckKind kind) {
    return kind == CheckKind::legendre || kind == CheckKind::oppermann;
}
inline bool is_pair_check(CheckKind kind) { return !is_square_check(kind); }

// Small value-semantic set of checks.
class CheckSet {
public:
    CheckSet() = default;

    static CheckSet all();
    // Parses a comma-separated token list; throws UsageError on unknown
    // or empty tokens.
    static CheckSet parse(std::string_view list);

    void insert(CheckKind kind) { mask_ |= bit(kind); }
    void erase(CheckKind kind) { mask_ &= ~bit(kind); }
    bool contains(CheckKind kind) const { return mask_ & bit(kind); }
    bool empty() const { return mask_ == 0; }
    size_t size() const { return size_t(__builtin_popcount(mask_)); }

    bool any_pair_check() const;
    bool any_square_check() const;

    // Enabled kinds in enum order.
    std::vector<CheckKind> kinds() const;
    // Enabled tokens in alphabetical order (canonical for digests and
    // reports).
    std::vector<std::string> sorted_tokens() const;

    friend bool operator==(const CheckSet&, const CheckSet&) = default;

private:
    static uint32_t bit(CheckKind kind) { return uint32_t{1} << uint8_t(kind); }
    uint32_t mask_ = 0;
};

}  // namespace paritygap
