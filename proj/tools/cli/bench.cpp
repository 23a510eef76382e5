#include "bench.hpp"

#include <chrono>
#include <ostream>
#include <sstream>
#include <string>

#include "fermatkit/errors.hpp"
#include "fermatkit/factorizer.hpp"
#include "fermatkit/oracle.hpp"

namespace fermatkit::cli {
namespace {

enum class Parity { Any, Odd, Even };

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

void expand_item(std::string_view item, std::vector<Natural>& out) {
    std::istringstream words{std::string(item)};
    std::string range;
    std::string parity_word;
    std::string extra;
    words >> range >> parity_word >> extra;
    if (range.empty() || !extra.empty()) {
        throw InvalidInput("bench: cannot parse target '" + std::string(item) + "'");
    }

    Parity parity = Parity::Any;
    if (parity_word == "odd") {
        parity = Parity::Odd;
    } else if (parity_word == "even") {
        parity = Parity::Even;
    } else if (!parity_word.empty()) {
        throw InvalidInput("bench: unknown filter '" + parity_word + "' (expected odd or even)");
    }

    const auto dots = range.find("..");
    if (dots == std::string::npos) {
        if (parity != Parity::Any) {
            throw InvalidInput("bench: parity filter needs a range, got '" + std::string(item) + "'");
        }
        out.push_back(Natural::parse(range));
        return;
    }
    Natural lo = Natural::parse(range.substr(0, dots));
    const Natural hi = Natural::parse(range.substr(dots + 2));
    if (lo > hi) throw InvalidInput("bench: empty range '" + range + "'");
    if ((parity == Parity::Odd && lo.is_even()) || (parity == Parity::Even && lo.is_odd())) {
        lo += Natural(1);
    }
    const Natural step(parity == Parity::Any ? 1 : 2);
    for (Natural n = lo; n <= hi; n += step) out.push_back(n);
}

std::uint64_t elapsed_ns(std::chrono::steady_clock::time_point start) {
    const auto d = std::chrono::steady_clock::now() - start;
    return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(d).count());
}

}  // namespace

std::vector<Natural> parse_targets(std::string_view spec) {
    std::vector<Natural> targets;
    while (true) {
        const auto comma = spec.find(',');
        const std::string_view item = trim(spec.substr(0, comma));
        if (item.empty()) throw InvalidInput("bench: empty target in list");
        expand_item(item, targets);
        if (comma == std::string_view::npos) break;
        spec.remove_prefix(comma + 1);
    }
    for (const Natural& n : targets) {
        if (n < Natural(2)) throw InvalidInput("bench: targets must be >= 2, got " + n.to_string());
    }
    return targets;
}

BenchRecord bench_one(const Natural& n, Budget budget) {
    BenchRecord record;
    record.n = n;

    auto start = std::chrono::steady_clock::now();
    const Factorization fermat = factorize(n, budget);
    record.fermat_time_ns = elapsed_ns(start);
    record.fermat_candidates = fermat.stats.candidates_tested;

    start = std::chrono::steady_clock::now();
    const Factorization trial = oracle::trial_division_factorize(n, record.trial_divisions);
    record.trial_time_ns = elapsed_ns(start);

    record.agree = fermat == trial;
    return record;
}

void write_csv_row(std::ostream& os, const BenchRecord& r) {
    os << r.n << ',' << r.fermat_candidates << ',' << r.fermat_time_ns << ',' << r.trial_divisions << ','
       << r.trial_time_ns << ',' << (r.agree ? "true" : "false") << '\n';
}

}  // namespace fermatkit::cli
