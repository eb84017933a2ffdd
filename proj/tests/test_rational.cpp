#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "symrig/rational.hpp"

using namespace symrig;

TEST_CASE("rank of simple matrices") {
    CHECK(rational_rank({}) == 0);
    CHECK(rational_rank({{0, 0}, {0, 0}}) == 0);
    CHECK(rational_rank({{1, 0}, {0, 1}}) == 2);
    CHECK(rational_rank({{1, 2}, {2, 4}}) == 1);
    CHECK(rational_rank({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 2);
}

TEST_CASE("rank is exact on fractional input") {
    // Hilbert segments are notoriously ill-conditioned in floating point
    RationalMatrix H;
    for (int i = 0; i < 6; ++i) {
        RationalRow row;
        for (int j = 0; j < 6; ++j) row.push_back(Rational(1, i + j + 1));
        H.push_back(row);
    }
    CHECK(rational_rank(H) == 6);
    H.push_back(H[0]);
    CHECK(rational_rank(H) == 6);
}

TEST_CASE("rank under random row operations is invariant") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int trial = 0; trial < 50; ++trial) {
        RationalMatrix M;
        for (int i = 0; i < 4; ++i) {
            RationalRow row;
            for (int j = 0; j < 5; ++j) row.push_back(coef(rng));
            M.push_back(row);
        }
        std::size_t r = rational_rank(M);
        // add a multiple of row 0 to row 1, append a combination row
        RationalMatrix N = M;
        for (int j = 0; j < 5; ++j) N[1][j] += Rational(3) * M[0][j];
        RationalRow combo(5, 0);
        for (int j = 0; j < 5; ++j) combo[j] = M[2][j] - M[3][j];
        N.push_back(combo);
        CHECK(rational_rank(N) == r);
    }
}

TEST_CASE("incremental eliminator picks independent rows") {
    RationalEliminator e;
    CHECK(e.add({1, 0, 0}));
    CHECK_FALSE(e.add({2, 0, 0}));
    CHECK(e.add({1, 1, 0}));
    CHECK_FALSE(e.add({3, 1, 0}));
    CHECK(e.add({0, 0, Rational(1, 7)}));
    CHECK(e.rank() == 3);
    CHECK_FALSE(e.add({5, -2, Rational(22, 7)}));
}
