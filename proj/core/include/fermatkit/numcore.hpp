#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "fermatkit/natural.hpp"

namespace fermatkit {

/// Number of residues mod 100 that a perfect square can end in.
inline constexpr std::size_t kSquareResidueCount = 22;

/// The residues r in [0, 100) for which r == x*x (mod 100) for some x, in
/// increasing order. In base-10 terms these are the final digit pairs 00, e1,
/// e4, 25, o6 and e9 (e even, o odd).
const std::array<std::uint8_t, kSquareResidueCount>& square_residues();

/// Floor square root: the r with r*r <= n < (r+1)*(r+1). Exact at every
/// magnitude.
Natural isqrt(const Natural& n);
std::uint64_t isqrt(std::uint64_t n);

/// Exact floor square root of n given a lower bound `hint <= isqrt(n)`.
/// Cost is proportional to isqrt(n) - hint, which makes it the cheap choice
/// when successive queries have slowly growing roots.
std::uint64_t isqrt_from(std::uint64_t n, std::uint64_t hint);

/// Last-two-digit test: true iff n mod 100 is one of square_residues().
/// Necessary for squareness, not sufficient (21 passes).
bool square_filter(const Natural& n);
bool square_filter(std::uint64_t n);

struct SquareCheck {
    bool passes_filter = false;
    std::optional<Natural> root;  // present iff the checked value is a perfect square

    bool is_square() const { return root.has_value(); }
};

/// Runs square_filter first and only computes isqrt when the filter passes.
SquareCheck check_square(const Natural& n);

}  // namespace fermatkit
