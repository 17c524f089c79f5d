#include "paritygap/checks.hpp"

#include <algorithm>
#include <array>

namespace paritygap {

namespace {

constexpr std::array<std::string_view, kCheckCount> kTokens = {
    "parity",   "identity", "lemma1",  "lemma2",    "chain",     "theorem1",
    "eq14",     "legendre", "andrica", "brocard",   "oppermann", "beyond_midpoint",
};

}  // namespace

std::string_view check_token(CheckKind kind) { return kTokens[uint8_t(kind)]; }

std::optional<CheckKind> check_from_token(std::string_view token) {
    for (size_t i = 0; i < kTokens.size(); ++i) {
        if (kTokens[i] == token) return CheckKind(i);
    }
    return std::nullopt;
}

CheckSet CheckSet::all() {
    CheckSet s;
    for (size_t i = 0; i < kCheckCount; ++i) s.insert(CheckKind(i));
    return s;
}

CheckSet CheckSet::parse(std::string_view list) {
    CheckSet s;
    size_t pos = 0;
    while (pos <= list.size()) {
        size_t comma = list.find(',', pos);
        std::string_view token = list.substr(
            pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        if (token.empty()) {
            throw UsageError("empty check token in list '" + std::string(list) + "'");
        }
        auto kind = check_from_token(token);
        if (!kind) {
            throw UsageError("unknown check '" + std::string(token) + "'");
        }
        s.insert(*kind);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    if (s.empty()) throw UsageError("check list is empty");
    return s;
}

bool CheckSet::any_pair_check() const {
    for (size_t i = 0; i < kCheckCount; ++i) {
        CheckKind k = CheckKind(i);
        if (contains(k) && is_pair_check(k)) return true;
    }
    return false;
}

bool CheckSet::any_square_check() const {
    return contains(CheckKind::legendre) || contains(CheckKind::oppermann);
}

std::vector<CheckKind> CheckSet::kinds() const {
    std::vector<CheckKind> out;
    for (size_t i = 0; i < kCheckCount; ++i) {
        if (contains(CheckKind(i))) out.push_back(CheckKind(i));
    }
    return out;
}

std::vector<std::string> CheckSet::sorted_tokens() const {
    std::vector<std::string> out;
    for (CheckKind k : kinds()) out.emplace_back(check_token(k));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace paritygap
