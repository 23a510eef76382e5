#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace fermatkit {

/// Unbounded non-negative integer.
///
/// Thin value type over GMP's mpz_class that enforces `value >= 0` at every
/// construction and subtraction. Decimal text is the only external
/// representation: parse() accepts plain ASCII digits and nothing else.
class Natural {
public:
    Natural() = default;

    template <std::integral T>
    Natural(T v) {  // NOLINT(google-explicit-constructor)
        if constexpr (std::is_signed_v<T>) {
            if (v < 0) throw_negative();
            value_ = static_cast<unsigned long>(v);
        } else {
            static_assert(sizeof(T) <= sizeof(unsigned long));
            value_ = static_cast<unsigned long>(v);
        }
    }

    explicit Natural(mpz_class v);

    /// Parses a non-empty string of decimal digits. Leading zeros are
    /// accepted; signs, whitespace and any other character are not.
    static Natural parse(std::string_view decimal);
    static std::optional<Natural> try_parse(std::string_view decimal);

    std::string to_string() const { return value_.get_str(10); }

    const mpz_class& mpz() const noexcept { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_odd() const { return mpz_odd_p(value_.get_mpz_t()) != 0; }
    bool is_even() const { return !is_odd(); }

    bool fits_u64() const { return mpz_sizeinbase(value_.get_mpz_t(), 2) <= 64; }
    /// Precondition: fits_u64().
    std::uint64_t to_u64() const;

    std::size_t bit_length() const;

    /// Remainder modulo a small positive modulus.
    std::uint64_t mod(std::uint64_t m) const;

    Natural& operator+=(const Natural& rhs);
    Natural& operator*=(const Natural& rhs);
    /// Throws std::domain_error if rhs > *this.
    Natural& operator-=(const Natural& rhs);

    friend Natural operator+(Natural lhs, const Natural& rhs) { return lhs += rhs; }
    friend Natural operator*(Natural lhs, const Natural& rhs) { return lhs *= rhs; }
    friend Natural operator-(Natural lhs, const Natural& rhs) { return lhs -= rhs; }

    /// Floor division; throws std::domain_error on a zero divisor.
    friend Natural operator/(const Natural& lhs, const Natural& rhs);
    friend Natural operator%(const Natural& lhs, const Natural& rhs);

    Natural half() const;
    Natural pow(std::uint64_t exponent) const;

    friend bool operator==(const Natural& a, const Natural& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
        return cmp(a.value_, b.value_) <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const Natural& n);

private:
    [[noreturn]] static void throw_negative();

    mpz_class value_{0};
};

}  // namespace fermatkit
