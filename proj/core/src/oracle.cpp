#include "fermatkit/oracle.hpp"

#include "fermatkit/errors.hpp"

namespace fermatkit::oracle {
namespace {

void push(Factorization& f, const Natural& prime) {
    if (!f.factors.empty() && f.factors.back().prime == prime) {
        ++f.factors.back().exponent;
    } else {
        f.factors.push_back({prime, 1});
    }
}

}  // namespace

bool trial_division_is_prime(const Natural& n) {
    if (n < Natural(2)) throw InvalidInput("trial_division_is_prime: expected a number >= 2");
    for (Natural d(2); d * d <= n; d += Natural(1)) {
        if ((n % d).is_zero()) return false;
    }
    return true;
}

Factorization trial_division_factorize(const Natural& n, std::uint64_t& divisions) {
    if (n.is_zero()) throw InvalidInput("trial_division_factorize: input must be >= 1");
    divisions = 0;
    Factorization f;
    f.input = n;
    Natural rest = n;
    Natural d(2);
    while (d * d <= rest) {
        ++divisions;
        if ((rest % d).is_zero()) {
            push(f, d);
            rest = rest / d;
            continue;
        }
        d += Natural(d == Natural(2) ? 1 : 2);
    }
    if (!rest.is_one()) push(f, rest);
    return f;
}

Factorization trial_division_factorize(const Natural& n) {
    std::uint64_t ignored = 0;
    return trial_division_factorize(n, ignored);
}

}  // namespace fermatkit::oracle
