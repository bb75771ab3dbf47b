#include "gentle/field.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace gentle;

TEST(Field, PrimeValidation)
{
    EXPECT_EQ(Field::prime(5).p, 5u);
    EXPECT_THROW(Field::prime(1), DomainError);
    EXPECT_THROW(Field::prime(9), DomainError);
    EXPECT_THROW(Field::prime(65537), DomainError);
}

TEST(Field, InverseRoundTrip)
{
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 65521u}) {
        Field F{p};
        for (std::uint32_t a = 1; a < std::min(p, 500u); ++a)
            EXPECT_EQ(F.mul(a, F.inv(a)), 1u);
        EXPECT_THROW(F.inv(0), DomainError);
    }
}

TEST(Field, FromIntNegative)
{
    Field F{5};
    EXPECT_EQ(F.from_int(-1), 4u);
    EXPECT_EQ(F.from_int(-10), 0u);
    EXPECT_EQ(F.neg(F.from_int(3)), 2u);
}

TEST(Matrix, RankAndNullspace)
{
    Field F{3};
    Matrix A(3, 4);
    // rows (1 2 0 1), (2 1 0 2), (0 0 1 1): second row is 2 * first
    A(0, 0) = 1, A(0, 1) = 2, A(0, 3) = 1;
    A(1, 0) = 2, A(1, 1) = 1, A(1, 3) = 2;
    A(2, 2) = 1, A(2, 3) = 1;
    EXPECT_EQ(rank(F, A), 2u);
    Matrix N = nullspace(F, A);
    EXPECT_EQ(N.cols(), 2u);
    EXPECT_TRUE(multiply(F, A, N).is_zero());
}

TEST(Matrix, RankOverDifferentFields)
{
    // determinant 2: singular only in characteristic 2
    auto make = [](const Field& F) {
        Matrix A(2, 2);
        A(0, 0) = 1, A(0, 1) = 1, A(1, 0) = 1, A(1, 1) = F.from_int(3);
        return A;
    };
    EXPECT_EQ(rank(Field{2}, make(Field{2})), 1u);
    EXPECT_EQ(rank(Field{3}, make(Field{3})), 2u);
    EXPECT_TRUE(invertible(Field{5}, make(Field{5})));
}

TEST(Matrix, SolveRandomSystems)
{
    std::mt19937 rng(11);
    Field F{7};
    for (int trial = 0; trial < 50; ++trial) {
        Matrix A(4, 5);
        std::vector<std::uint32_t> x(5);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 5; ++j)
                A(i, j) = rng() % 7;
        for (auto& v : x)
            v = rng() % 7;
        std::vector<std::uint32_t> b(4, 0);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 5; ++j)
                b[i] = F.add(b[i], F.mul(A(i, j), x[j]));
        std::vector<std::uint32_t> y;
        ASSERT_TRUE(solve(F, A, b, y));
        for (std::size_t i = 0; i < 4; ++i) {
            std::uint32_t s = 0;
            for (std::size_t j = 0; j < 5; ++j)
                s = F.add(s, F.mul(A(i, j), y[j]));
            EXPECT_EQ(s, b[i]);
        }
    }
}

TEST(Matrix, ColumnBasisSpansColumns)
{
    Field F{2};
    Matrix A(2, 3);
    A(0, 0) = 1, A(1, 1) = 1, A(0, 2) = 1, A(1, 2) = 1;
    Matrix B = column_basis(F, A);
    EXPECT_EQ(B.cols(), 2u);
    EXPECT_EQ(rank(F, hstack(B, A)), 2u);
}
