#include "pellprime/sequences.hpp"

#include <cstdint>
#include <random>

#include <gtest/gtest.h>

using namespace pellprime;

TEST(Sequences, InitialWindows)
{
    for (std::int64_t r : {1, 2, 5, 17}) {
        EXPECT_EQ(seq_eval(SequenceKind::X, r, 0), 1);
        EXPECT_EQ(seq_eval(SequenceKind::X, r, 1), 1);
        EXPECT_EQ(seq_eval(SequenceKind::X, r, 2), 1);
        EXPECT_EQ(seq_eval(SequenceKind::Y, r, 0), 0);
        EXPECT_EQ(seq_eval(SequenceKind::Y, r, 1), 1);
        EXPECT_EQ(seq_eval(SequenceKind::Y, r, 2), 2);
        EXPECT_EQ(seq_eval(SequenceKind::Z, r, 0), 0);
        EXPECT_EQ(seq_eval(SequenceKind::Z, r, 1), 0);
        EXPECT_EQ(seq_eval(SequenceKind::Z, r, 2), 1);
    }
}

TEST(Sequences, FrozenValuesForRTwo)
{
    // hand-iterated s_{i+3} = 3 s_{i+2} - 3 s_{i+1} + 3 s_i
    EXPECT_EQ(seq_eval(SequenceKind::X, 2, 5), 21);
    EXPECT_EQ(seq_eval(SequenceKind::Y, 2, 5), 15);
    EXPECT_EQ(seq_eval(SequenceKind::Z, 2, 5), 12);
    EXPECT_EQ(seq_eval(SequenceKind::X, 2, 7), 99);
    EXPECT_EQ(seq_eval(SequenceKind::Y, 2, 7), 81);
    EXPECT_EQ(seq_eval(SequenceKind::Z, 2, 7), 63);
}

TEST(Sequences, ModularModeMatchesExactMode)
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint64_t> ndist(2, 1 << 20);
    for (int iter = 0; iter < 20; ++iter) {
        const std::uint64_t n = ndist(rng);
        const std::int64_t r = static_cast<std::int64_t>(rng() % 50 + 1);
        for (std::uint64_t i : {0ull, 1ull, 2ull, 3ull, 17ull, 64ull, 121ull}) {
            for (SequenceKind kind : {SequenceKind::X, SequenceKind::Y, SequenceKind::Z}) {
                BigInt exact = seq_eval(kind, r, i) % n;
                EXPECT_EQ(seq_eval_mod(kind, static_cast<std::uint64_t>(r), i, n),
                          static_cast<std::uint64_t>(exact));
            }
        }
    }
}

TEST(Sequences, MatrixPowerBasics)
{
    auto k0 = matrix_power_vector(2, 0);
    EXPECT_EQ(k0[0], 1);
    EXPECT_EQ(k0[1], 0);
    EXPECT_EQ(k0[2], 0);

    auto k1 = matrix_power_vector(2, 1);
    EXPECT_EQ(k1[0], 1);
    EXPECT_EQ(k1[1], 1);
    EXPECT_EQ(k1[2], 0);

    auto k5 = matrix_power_vector(2, 5);
    EXPECT_EQ(k5[0], 21);
    EXPECT_EQ(k5[1], 15);
    EXPECT_EQ(k5[2], 12);
}

TEST(Sequences, MatrixPowerMatchesSequencesUpTo200)
{
    for (std::int64_t r : {1, 2, 3, 7, 50}) {
        for (std::uint64_t k = 0; k <= 200; ++k) {
            auto v = matrix_power_vector(r, k);
            ASSERT_EQ(v[0], seq_eval(SequenceKind::X, r, k)) << "r=" << r << " k=" << k;
            ASSERT_EQ(v[1], seq_eval(SequenceKind::Y, r, k)) << "r=" << r << " k=" << k;
            ASSERT_EQ(v[2], seq_eval(SequenceKind::Z, r, k)) << "r=" << r << " k=" << k;
        }
    }
}

TEST(Sequences, MatrixPowerModMatchesExact)
{
    std::mt19937_64 rng(21);
    for (int iter = 0; iter < 10; ++iter) {
        const std::uint64_t n = rng() % (1 << 16) + 2;
        const std::int64_t r = static_cast<std::int64_t>(rng() % 50 + 1);
        for (std::uint64_t k : {0ull, 1ull, 2ull, 9ull, 31ull, 100ull}) {
            auto exact = matrix_power_vector(r, k);
            auto mod = matrix_power_vector_mod(static_cast<std::uint64_t>(r), k, n);
            for (int c = 0; c < 3; ++c) {
                EXPECT_EQ(mod[c], static_cast<std::uint64_t>(exact[c] % n));
            }
        }
    }
}

TEST(Sequences, RankOfAppearanceExamples)
{
    // Y mod 5 runs 0,1,2,3,1,0 at i = 0..5
    EXPECT_EQ(seq_eval_mod(SequenceKind::Y, 2, 4, 5), 1u);
    EXPECT_EQ(rank_of_appearance(SequenceKind::Y, 2, 5), 5u);

    // Z_7 = 63 vanishes mod 7 and no earlier index past the identically
    // zero seed Z_1 does
    EXPECT_EQ(rank_of_appearance(SequenceKind::Z, 2, 7), 7u);
    for (std::uint64_t m = 2; m < 7; ++m) {
        EXPECT_NE(seq_eval_mod(SequenceKind::Z, 2, m, 7), 0u);
    }

    // the bound is <= p; the exact rank is not pinned
    auto rank13 = rank_of_appearance(SequenceKind::Z, 2, 13);
    ASSERT_TRUE(rank13.has_value());
    EXPECT_LE(*rank13, 13u);

    EXPECT_THROW(rank_of_appearance(SequenceKind::X, 2, 7), std::invalid_argument);
    EXPECT_THROW(rank_of_appearance(SequenceKind::Y, 2, 3), std::invalid_argument);
}
