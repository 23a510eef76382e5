#include "fermatkit/numcore.hpp"

#include <bit>

namespace fermatkit {
namespace {

constexpr std::array<bool, 100> make_residue_table() {
    std::array<bool, 100> table{};
    for (unsigned x = 0; x < 100; ++x) table[(x * x) % 100] = true;
    return table;
}

constexpr std::array<bool, 100> kIsSquareResidue = make_residue_table();

constexpr std::array<std::uint8_t, kSquareResidueCount> make_residue_list() {
    std::array<std::uint8_t, kSquareResidueCount> list{};
    std::size_t k = 0;
    for (unsigned r = 0; r < 100; ++r) {
        if (kIsSquareResidue[r]) list[k++] = static_cast<std::uint8_t>(r);
    }
    return list;
}

constexpr auto kResidueList = make_residue_list();

static_assert([] {
    std::size_t count = 0;
    for (bool b : kIsSquareResidue) count += b ? 1 : 0;
    return count;
}() == kSquareResidueCount);

}  // namespace

const std::array<std::uint8_t, kSquareResidueCount>& square_residues() {
    return kResidueList;
}

Natural isqrt(const Natural& n) {
    if (n.fits_u64()) return Natural(isqrt(n.to_u64()));
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), n.mpz().get_mpz_t());
    return Natural(std::move(root));
}

std::uint64_t isqrt(std::uint64_t n) {
    if (n < 2) return n;
    // Start above the root: 2^ceil(bits/2) > sqrt(n). Newton's iteration on
    // integers then decreases monotonically to floor(sqrt(n)).
    const int bits = std::bit_width(n);
    std::uint64_t x = std::uint64_t{1} << ((bits + 1) / 2);
    while (true) {
        const std::uint64_t y = (x + n / x) / 2;
        if (y >= x) return x;
        x = y;
    }
}

std::uint64_t isqrt_from(std::uint64_t n, std::uint64_t hint) {
    std::uint64_t r = hint;
    // (r+1)^2 <= n  <=>  r+1 <= n / (r+1), which avoids overflow near 2^64.
    while (r + 1 <= n / (r + 1)) ++r;
    return r;
}

bool square_filter(std::uint64_t n) {
    return kIsSquareResidue[n % 100];
}

bool square_filter(const Natural& n) {
    return kIsSquareResidue[n.mod(100)];
}

SquareCheck check_square(const Natural& n) {
    SquareCheck check;
    check.passes_filter = square_filter(n);
    if (!check.passes_filter) return check;
    Natural r = isqrt(n);
    if (r * r == n) check.root = std::move(r);
    return check;
}

}  // namespace fermatkit
