#pragma once

#include <cstdint>

#include "fermatkit/factorizer.hpp"
#include "fermatkit/natural.hpp"

// Trial-division reference implementations. They share nothing with the
// b-scan and exist to check it and to serve as the benchmark baseline.
namespace fermatkit::oracle {

/// True iff no d in [2, isqrt(N)] divides N. InvalidInput for N < 2.
bool trial_division_is_prime(const Natural& n);

/// Divides by 2, then 3, 5, 7, ... while d*d <= the remaining cofactor.
/// InvalidInput for N = 0.
Factorization trial_division_factorize(const Natural& n);

/// Same, and reports the number of trial divisions performed.
Factorization trial_division_factorize(const Natural& n, std::uint64_t& divisions);

}  // namespace fermatkit::oracle
