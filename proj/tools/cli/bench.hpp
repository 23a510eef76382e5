#pragma once

#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "fermatkit/fermat.hpp"
#include "fermatkit/natural.hpp"

namespace fermatkit::cli {

// One row of the Fermat-vs-trial-division comparison.
struct BenchRecord {
    Natural n;
    std::uint64_t fermat_candidates = 0;  // summed over every b-scan in factorize(n)
    std::uint64_t fermat_time_ns = 0;
    std::uint64_t trial_divisions = 0;
    std::uint64_t trial_time_ns = 0;
    bool agree = false;
};

inline constexpr std::string_view kBenchCsvHeader =
    "n,fermat_candidates,fermat_time_ns,trial_divisions,trial_time_ns,agree";

/// Expands a target list such as "3..99 odd, 176400, 9409".
///
/// Items are separated by commas. Each item is a decimal N or an inclusive
/// range A..B, optionally followed by "odd" or "even" to keep only numbers of
/// that parity. Throws InvalidInput on anything else, on A > B, and on any
/// target below 2.
std::vector<Natural> parse_targets(std::string_view spec);

/// Runs factorize and the trial-division oracle on `n` and compares them.
/// Propagates BudgetExhausted from factorize.
BenchRecord bench_one(const Natural& n, Budget budget);

void write_csv_row(std::ostream& os, const BenchRecord& record);

}  // namespace fermatkit::cli
