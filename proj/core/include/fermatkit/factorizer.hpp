#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fermatkit/fermat.hpp"
#include "fermatkit/natural.hpp"

namespace fermatkit {

struct PrimePower {
    Natural prime;
    std::uint64_t exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization of `input`, primes strictly increasing. Empty for 1.
struct Factorization {
    Natural input;
    std::vector<PrimePower> factors;
    // Summed over every b-scan performed; zero for the trial-division oracle.
    SearchStats stats;

    /// Product of prime^exponent over all factors (1 for an empty list).
    Natural product() const;

    /// Compares the input and the factor list. Stats are not part of the
    /// factorization's identity.
    friend bool operator==(const Factorization& a, const Factorization& b) {
        return a.input == b.input && a.factors == b.factors;
    }
};

struct TwosSplit {
    std::uint64_t twos = 0;  // m in N = 2^m * P
    Natural odd_part;        // P

    friend bool operator==(const TwosSplit&, const TwosSplit&) = default;
};

/// N = 2^m * P with P odd. Throws InvalidInput for N = 0.
TwosSplit extract_twos(const Natural& n);

struct SquareReduction {
    Natural base;
    std::uint64_t multiplier = 1;  // base^multiplier == P; always a power of 2

    friend bool operator==(const SquareReduction&, const SquareReduction&) = default;
};

/// Replaces P by its square root for as long as P is a perfect square.
/// base is non-square, or 1 when P = 1. Throws InvalidInput for P = 0.
SquareReduction reduce_square(const Natural& p);

/// Full factorization: strip powers of 2, then for each odd factor reduce
/// squares and split with fermat_split, recursing on both halves until every
/// piece is prime. `budget` applies to each individual b-scan.
///
/// Throws InvalidInput for N = 0 and BudgetExhausted (naming the cofactor
/// whose scan ran out) if any scan exceeds the budget.
Factorization factorize(const Natural& n, Budget budget = std::nullopt);

/// Renders "p^e * p^e * ..." with exponent 1 omitted; "1" for the empty list.
std::string format_factors(const Factorization& f);

}  // namespace fermatkit
