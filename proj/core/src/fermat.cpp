#include "fermatkit/fermat.hpp"

#include <stdexcept>
#include <string>

#include "fermatkit/errors.hpp"
#include "fermatkit/numcore.hpp"

namespace fermatkit {
namespace {

constexpr std::uint64_t kNarrowLimit = std::uint64_t{1} << 32;

void require_odd_at_least_three(const Natural& p, const char* what) {
    if (p < Natural(3) || p.is_even()) {
        throw InvalidInput(std::string(what) + ": expected an odd number >= 3, got " + p.to_string());
    }
}

SplitOutcome make_outcome(Natural b, Natural c, const SearchStats& stats) {
    SplitOutcome out;
    out.kind = (c + Natural(1) == b) ? SplitKind::Prime : SplitKind::NontrivialSplit;
    out.factor_hi = b + c;
    out.factor_lo = b - c;
    out.b = std::move(b);
    out.c = std::move(c);
    out.stats = stats;
    return out;
}

[[noreturn]] void throw_square_input(const Natural& p) {
    throw InvalidInput("fermat_split: " + p.to_string() + " is a perfect square");
}

}  // namespace

std::string_view to_string(SplitKind kind) {
    switch (kind) {
        case SplitKind::NontrivialSplit:
            return "split";
        case SplitKind::Prime:
            return "prime";
    }
    return "unknown";
}

SearchBounds search_bounds(const Natural& p) {
    require_odd_at_least_three(p, "search_bounds");
    Natural root = isqrt(p);
    SearchBounds bounds;
    bounds.b_min = (root * root == p) ? root : root + Natural(1);
    bounds.b_max = (p + Natural(1)).half();
    bounds.c_max = bounds.b_max - Natural(1);
    return bounds;
}

namespace detail {

SplitOutcome fermat_scan_narrow(const Natural& p, Budget budget) {
    const std::uint64_t target = p.to_u64();
    const std::uint64_t b_max = (target + 1) / 2;
    std::uint64_t b = isqrt(target);
    if (b * b != target) ++b;
    // residual = b^2 - P, advanced by (b+1)^2 - b^2 = 2b + 1 per step.
    std::uint64_t residual = b * b - target;
    std::uint64_t root_hint = 0;
    SearchStats stats;

    for (; b <= b_max; ++b) {
        if (budget && stats.candidates_tested == *budget) throw BudgetExhausted(p, *budget);
        ++stats.candidates_tested;
        if (!square_filter(residual)) {
            ++stats.filter_rejections;
        } else {
            ++stats.isqrt_confirmations;
            // residual only grows, so the previous root is a valid lower bound.
            root_hint = isqrt_from(residual, root_hint);
            if (root_hint * root_hint == residual) {
                if (root_hint == 0) throw_square_input(p);
                return make_outcome(Natural(b), Natural(root_hint), stats);
            }
        }
        residual += 2 * b + 1;
    }
    throw std::logic_error("fermat_scan_narrow: passed b_max without a hit for " + p.to_string());
}

SplitOutcome fermat_scan_wide(const Natural& p, Budget budget) {
    const mpz_class& target = p.mpz();
    mpz_class b_max = (target + 1) / 2;
    mpz_class b;
    mpz_class rem;
    mpz_sqrtrem(b.get_mpz_t(), rem.get_mpz_t(), target.get_mpz_t());
    if (sgn(rem) != 0) ++b;
    mpz_class residual = b * b - target;
    mpz_class root;
    SearchStats stats;

    for (; b <= b_max; ++b) {
        if (budget && stats.candidates_tested == *budget) throw BudgetExhausted(p, *budget);
        ++stats.candidates_tested;
        if (!square_filter(static_cast<std::uint64_t>(mpz_fdiv_ui(residual.get_mpz_t(), 100)))) {
            ++stats.filter_rejections;
        } else {
            ++stats.isqrt_confirmations;
            mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), residual.get_mpz_t());
            if (sgn(rem) == 0) {
                if (sgn(root) == 0) throw_square_input(p);
                return make_outcome(Natural(b), Natural(root), stats);
            }
        }
        // residual += 2b + 1
        mpz_addmul_ui(residual.get_mpz_t(), b.get_mpz_t(), 2);
        ++residual;
    }
    throw std::logic_error("fermat_scan_wide: passed b_max without a hit for " + p.to_string());
}

}  // namespace detail

SplitOutcome fermat_split(const Natural& p, Budget budget) {
    require_odd_at_least_three(p, "fermat_split");
    if (check_square(p).is_square()) throw_square_input(p);
    if (p < Natural(kNarrowLimit)) return detail::fermat_scan_narrow(p, budget);
    return detail::fermat_scan_wide(p, budget);
}

bool is_prime(const Natural& n, Budget budget) {
    if (n < Natural(2)) throw InvalidInput("is_prime: expected a number >= 2, got " + n.to_string());
    if (n == Natural(2)) return true;
    if (n.is_even()) return false;
    // An odd square > 1 has its root as a proper divisor.
    if (check_square(n).is_square()) return false;
    return fermat_split(n, budget).is_prime();
}

}  // namespace fermatkit
