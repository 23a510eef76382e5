#include "fermatkit/factorizer.hpp"

#include <map>
#include <utility>

#include "fermatkit/errors.hpp"
#include "fermatkit/numcore.hpp"

namespace fermatkit {
namespace {

class Splitter {
public:
    explicit Splitter(Budget budget) : budget_(budget) {}

    // Factors the odd `p`, adding every prime found with its exponent scaled
    // by `multiplicity`.
    void split(const Natural& p, std::uint64_t multiplicity) {
        if (p.is_one()) return;
        SquareReduction reduced = reduce_square(p);
        multiplicity *= reduced.multiplier;

        SplitOutcome outcome = fermat_split(reduced.base, budget_);
        stats_ += outcome.stats;
        if (outcome.is_prime()) {
            exponents_[reduced.base] += multiplicity;
            return;
        }
        split(outcome.factor_lo, multiplicity);
        split(outcome.factor_hi, multiplicity);
    }

    void add(const Natural& prime, std::uint64_t exponent) { exponents_[prime] += exponent; }

    Factorization finish(Natural input) && {
        Factorization f;
        f.input = std::move(input);
        f.factors.reserve(exponents_.size());
        for (auto& [prime, exponent] : exponents_) f.factors.push_back({prime, exponent});
        f.stats = stats_;
        return f;
    }

private:
    Budget budget_;
    std::map<Natural, std::uint64_t> exponents_;
    SearchStats stats_;
};

}  // namespace

Natural Factorization::product() const {
    Natural acc(1);
    for (const auto& [prime, exponent] : factors) acc *= prime.pow(exponent);
    return acc;
}

TwosSplit extract_twos(const Natural& n) {
    if (n.is_zero()) throw InvalidInput("extract_twos: input must be >= 1");
    const auto twos = static_cast<std::uint64_t>(mpz_scan1(n.mpz().get_mpz_t(), 0));
    mpz_class odd;
    mpz_fdiv_q_2exp(odd.get_mpz_t(), n.mpz().get_mpz_t(), twos);
    return {twos, Natural(std::move(odd))};
}

SquareReduction reduce_square(const Natural& p) {
    if (p.is_zero()) throw InvalidInput("reduce_square: input must be >= 1");
    SquareReduction r{p, 1};
    if (p.is_one()) return r;
    while (true) {
        SquareCheck check = check_square(r.base);
        if (!check.is_square()) return r;
        r.base = std::move(*check.root);
        r.multiplier *= 2;
    }
}

Factorization factorize(const Natural& n, Budget budget) {
    if (n.is_zero()) throw InvalidInput("factorize: input must be >= 1");
    Splitter splitter(budget);
    const TwosSplit twos = extract_twos(n);
    if (twos.twos > 0) splitter.add(Natural(2), twos.twos);
    splitter.split(twos.odd_part, 1);
    return std::move(splitter).finish(n);
}

std::string format_factors(const Factorization& f) {
    if (f.factors.empty()) return "1";
    std::string out;
    for (const auto& [prime, exponent] : f.factors) {
        if (!out.empty()) out += " * ";
        out += prime.to_string();
        if (exponent != 1) out += "^" + std::to_string(exponent);
    }
    return out;
}

}  // namespace fermatkit
