#include <gtest/gtest.h>

#include <random>
#include <set>
#include <string>

#include "fermatkit/numcore.hpp"

namespace fermatkit {
namespace {

// The base-10 classes of final digit pairs, spelled out digit by digit.
std::set<unsigned> residues_from_digit_classes() {
    std::set<unsigned> out;
    const std::string even = "02468";
    const std::string odd = "13579";
    out.insert(0);   // 00
    out.insert(25);  // 25
    for (char e : even) {
        const unsigned tens = static_cast<unsigned>(e - '0') * 10;
        out.insert(tens + 1);  // e1
        out.insert(tens + 4);  // e4
        out.insert(tens + 9);  // e9
    }
    for (char o : odd) out.insert(static_cast<unsigned>(o - '0') * 10 + 6);  // o6
    return out;
}

Natural random_natural(std::mt19937_64& rng, unsigned max_bits) {
    const unsigned bits = 1 + static_cast<unsigned>(rng() % max_bits);
    mpz_class v = 0;
    for (unsigned done = 0; done < bits; done += 64) {
        v <<= 64;
        v += mpz_class(std::to_string(rng()));
    }
    mpz_class mask = (mpz_class(1) << bits) - 1;
    v &= mask;
    return Natural(v);
}

TEST(IsqrtTest, Examples) {
    EXPECT_EQ(isqrt(Natural(0)), Natural(0));
    EXPECT_EQ(isqrt(Natural(11025)), Natural(105));
    EXPECT_EQ(isqrt(Natural(104)), Natural(10));
    EXPECT_EQ(isqrt(Natural(1)), Natural(1));
    EXPECT_EQ(isqrt(Natural(3)), Natural(1));
    EXPECT_EQ(isqrt(Natural(4)), Natural(2));
}

TEST(IsqrtTest, ExhaustiveSmallRange) {
    for (std::uint64_t n = 0; n <= 200'000; ++n) {
        const std::uint64_t r = isqrt(n);
        ASSERT_LE(r * r, n) << n;
        ASSERT_GT((r + 1) * (r + 1), n) << n;
    }
}

TEST(IsqrtTest, U64EdgeValues) {
    // Values around perfect squares near the top of the 64-bit range, where
    // a double-precision sqrt would round.
    for (std::uint64_t root : {UINT64_C(4294967295), UINT64_C(4294967294), UINT64_C(3037000499),
                               UINT64_C(94906265), UINT64_C(67108864)}) {
        const std::uint64_t sq = root * root;
        EXPECT_EQ(isqrt(sq), root);
        EXPECT_EQ(isqrt(sq - 1), root - 1);
        if (root < UINT64_C(4294967295)) EXPECT_EQ(isqrt(sq + 1), root);
    }
    EXPECT_EQ(isqrt(UINT64_MAX), UINT64_C(4294967295));
}

TEST(IsqrtTest, RandomArbitraryPrecisionUpTo256Bits) {
    std::mt19937_64 rng(20261015);
    for (int i = 0; i < 1000; ++i) {
        const Natural n = random_natural(rng, 256);
        const Natural r = isqrt(n);
        ASSERT_LE(r * r, n) << n;
        const Natural next = r + Natural(1);
        ASSERT_GT(next * next, n) << n;
    }
}

TEST(IsqrtTest, ExactOnHugeSquares) {
    const Natural root = Natural(2).pow(300) + Natural(12345);
    const Natural sq = root * root;
    EXPECT_EQ(isqrt(sq), root);
    EXPECT_EQ(isqrt(sq - Natural(1)), root - Natural(1));
    EXPECT_EQ(isqrt(sq + Natural(1)), root);
}

TEST(IsqrtFromTest, MatchesIsqrtForAnyValidHint) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 2000; ++i) {
        const std::uint64_t n = rng() >> (rng() % 40);
        const std::uint64_t r = isqrt(n);
        const std::uint64_t hint = r - std::min<std::uint64_t>(r, rng() % 1000);
        ASSERT_EQ(isqrt_from(n, hint), r) << n;
    }
    EXPECT_EQ(isqrt_from(UINT64_MAX, 4294967290), UINT64_C(4294967295));
}

TEST(SquareFilterTest, Examples) {
    EXPECT_TRUE(square_filter(Natural(11025)));
    EXPECT_FALSE(square_filter(Natural(43)));
    EXPECT_TRUE(square_filter(Natural(21)));
    EXPECT_NE(isqrt(Natural(21)) * isqrt(Natural(21)), Natural(21));
}

TEST(SquareFilterTest, ExactlyTheTwentyTwoDigitClasses) {
    const std::set<unsigned> expected = residues_from_digit_classes();
    ASSERT_EQ(expected.size(), 22u);

    std::set<unsigned> passing;
    for (unsigned r = 0; r < 100; ++r) {
        if (square_filter(Natural(r))) passing.insert(r);
    }
    EXPECT_EQ(passing, expected);

    const std::set<unsigned> listed(square_residues().begin(), square_residues().end());
    EXPECT_EQ(listed, expected);
}

TEST(SquareFilterTest, SingleDigitsUseImplicitLeadingZero) {
    // 1, 4, 9 are 01, 04, 09 (classes e1, e4, e9 with e = 0); 0 is 00.
    for (unsigned n : {0u, 1u, 4u, 9u}) EXPECT_TRUE(square_filter(Natural(n))) << n;
    for (unsigned n : {2u, 3u, 5u, 6u, 7u, 8u}) EXPECT_FALSE(square_filter(Natural(n))) << n;
}

TEST(SquareFilterTest, SoundOnEverySquareUpTo10k) {
    for (std::uint64_t r = 0; r <= 10'000; ++r) {
        ASSERT_TRUE(square_filter(Natural(r * r))) << r;
        ASSERT_TRUE(square_filter(r * r)) << r;
    }
}

TEST(SquareFilterTest, NarrowAndWideAgree) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 10'000; ++i) {
        const std::uint64_t n = rng();
        ASSERT_EQ(square_filter(n), square_filter(Natural(n)));
    }
}

TEST(CheckSquareTest, Examples) {
    const SquareCheck a = check_square(Natural(11025));
    EXPECT_TRUE(a.passes_filter);
    ASSERT_TRUE(a.root);
    EXPECT_EQ(*a.root, Natural(105));

    const SquareCheck one = check_square(Natural(1));
    EXPECT_TRUE(one.passes_filter);
    ASSERT_TRUE(one.root);
    EXPECT_EQ(*one.root, Natural(1));

    const SquareCheck b = check_square(Natural(105));
    EXPECT_FALSE(b.passes_filter);
    EXPECT_FALSE(b.root);

    const SquareCheck c = check_square(Natural(21));
    EXPECT_TRUE(c.passes_filter);
    EXPECT_FALSE(c.root);
}

TEST(CheckSquareTest, EquivalentToDefinitionUpToOneMillion) {
    for (std::uint64_t n = 0; n <= 1'000'000; ++n) {
        const Natural nat(n);
        const SquareCheck check = check_square(nat);
        const Natural r = isqrt(nat);
        const bool is_square = r * r == nat;
        ASSERT_EQ(check.root.has_value(), is_square) << n;
        if (check.root) {
            ASSERT_TRUE(check.passes_filter);
            ASSERT_EQ(*check.root * *check.root, nat);
        }
    }
}

}  // namespace
}  // namespace fermatkit
