#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "fermatkit/natural.hpp"

namespace fermatkit {

/// Upper limit on candidate b values a single scan may test. nullopt means
/// unbounded.
using Budget = std::optional<std::uint64_t>;

/// b ranges over [b_min, b_max], c over [1, c_max], for an odd P >= 3 with
/// b_max = k = (P + 1) / 2 so that 2k - 1 = P.
struct SearchBounds {
    Natural b_min;  // ceil(sqrt(P)); equals ceil(sqrt(P + 1)) when P is not a square
    Natural b_max;
    Natural c_max;  // k - 1

    friend bool operator==(const SearchBounds&, const SearchBounds&) = default;
};

struct SearchStats {
    std::uint64_t candidates_tested = 0;
    std::uint64_t filter_rejections = 0;    // b^2 - P failed the mod-100 filter
    std::uint64_t isqrt_confirmations = 0;  // filter passed, root computed

    SearchStats& operator+=(const SearchStats& rhs) {
        candidates_tested += rhs.candidates_tested;
        filter_rejections += rhs.filter_rejections;
        isqrt_confirmations += rhs.isqrt_confirmations;
        return *this;
    }

    friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

enum class SplitKind {
    NontrivialSplit,
    Prime,
};

std::string_view to_string(SplitKind kind);

/// Outcome of one b-scan. Always b^2 - c^2 = P and P = factor_hi * factor_lo.
/// For Prime, b = (P + 1) / 2 and c = b - 1, so the factors are P and 1.
struct SplitOutcome {
    SplitKind kind = SplitKind::Prime;
    Natural b;
    Natural c;
    Natural factor_hi;  // b + c
    Natural factor_lo;  // b - c
    SearchStats stats;

    bool is_prime() const { return kind == SplitKind::Prime; }

    friend bool operator==(const SplitOutcome&, const SplitOutcome&) = default;
};

/// Search interval for the odd P >= 3. Throws InvalidInput otherwise.
SearchBounds search_bounds(const Natural& p);

/// Scans b = b_min, b_min + 1, ... and stops at the first b for which
/// b^2 - P is a perfect square c^2 with c >= 1. That b is the smallest
/// qualifying one; if c = b - 1 there (which only happens at b_max) P is
/// prime, otherwise P = (b + c)(b - c) is a nontrivial split.
///
/// Requires P odd, P >= 3 and P not a perfect square (InvalidInput).
/// Throws BudgetExhausted if `budget` candidates are tested without a hit.
SplitOutcome fermat_split(const Natural& p, Budget budget = std::nullopt);

/// Primality by exhaustion of the b-scan: 2 is prime, other evens and odd
/// squares are composite, anything else is prime iff fermat_split says so.
/// Throws InvalidInput for n < 2 and propagates BudgetExhausted.
bool is_prime(const Natural& n, Budget budget = std::nullopt);

namespace detail {

// The two scan implementations behind fermat_split. The narrow one requires
// P < 2^32 so that every b^2 stays below 2^62; the wide one works for any P.
// Both return identical outcomes and stats. Preconditions are checked by
// fermat_split, not here.
SplitOutcome fermat_scan_narrow(const Natural& p, Budget budget);
SplitOutcome fermat_scan_wide(const Natural& p, Budget budget);

}  // namespace detail

}  // namespace fermatkit
