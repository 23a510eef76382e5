#include "fermatkit/natural.hpp"

#include <ostream>
#include <stdexcept>

#include "fermatkit/errors.hpp"

namespace fermatkit {

Natural::Natural(mpz_class v) : value_(std::move(v)) {
    if (sgn(value_) < 0) throw_negative();
}

void Natural::throw_negative() {
    throw std::domain_error("Natural: negative value");
}

std::optional<Natural> Natural::try_parse(std::string_view decimal) {
    if (decimal.empty()) return std::nullopt;
    for (char ch : decimal) {
        if (ch < '0' || ch > '9') return std::nullopt;
    }
    Natural n;
    // The digit scan above guarantees mpz accepts the string.
    n.value_.set_str(std::string(decimal), 10);
    return n;
}

Natural Natural::parse(std::string_view decimal) {
    if (auto n = try_parse(decimal)) return std::move(*n);
    throw InvalidInput("not a decimal natural number: '" + std::string(decimal) + "'");
}

std::uint64_t Natural::to_u64() const {
    if (!fits_u64()) throw std::overflow_error("Natural: value exceeds 64 bits");
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    return value_.get_ui();
}

std::size_t Natural::bit_length() const {
    return is_zero() ? 0 : mpz_sizeinbase(value_.get_mpz_t(), 2);
}

std::uint64_t Natural::mod(std::uint64_t m) const {
    if (m == 0) throw std::domain_error("Natural: modulus is zero");
    return mpz_fdiv_ui(value_.get_mpz_t(), m);
}

Natural& Natural::operator+=(const Natural& rhs) {
    value_ += rhs.value_;
    return *this;
}

Natural& Natural::operator*=(const Natural& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Natural& Natural::operator-=(const Natural& rhs) {
    if (cmp(value_, rhs.value_) < 0) throw std::domain_error("Natural: subtraction underflow");
    value_ -= rhs.value_;
    return *this;
}

Natural operator/(const Natural& lhs, const Natural& rhs) {
    if (rhs.is_zero()) throw std::domain_error("Natural: division by zero");
    Natural q;
    mpz_fdiv_q(q.value_.get_mpz_t(), lhs.value_.get_mpz_t(), rhs.value_.get_mpz_t());
    return q;
}

Natural operator%(const Natural& lhs, const Natural& rhs) {
    if (rhs.is_zero()) throw std::domain_error("Natural: division by zero");
    Natural r;
    mpz_fdiv_r(r.value_.get_mpz_t(), lhs.value_.get_mpz_t(), rhs.value_.get_mpz_t());
    return r;
}

Natural Natural::half() const {
    Natural h;
    mpz_fdiv_q_2exp(h.value_.get_mpz_t(), value_.get_mpz_t(), 1);
    return h;
}

Natural Natural::pow(std::uint64_t exponent) const {
    Natural p;
    mpz_pow_ui(p.value_.get_mpz_t(), value_.get_mpz_t(), exponent);
    return p;
}

std::ostream& operator<<(std::ostream& os, const Natural& n) {
    return os << n.to_string();
}

BudgetExhausted::BudgetExhausted(Natural cofactor, std::uint64_t budget)
    : std::runtime_error("search budget of " + std::to_string(budget) +
                         " candidates exhausted; unresolved cofactor " + cofactor.to_string()),
      cofactor_(std::move(cofactor)),
      budget_(budget) {}

}  // namespace fermatkit
