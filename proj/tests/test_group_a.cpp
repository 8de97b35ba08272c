#include <gtest/gtest.h>

#include <random>

#include "gaussloop/group_a.hpp"

using namespace gaussloop;

namespace {
// Independent model of A: a word in the generators maps to the set of indices occurring an odd
// number of times as subscripts (A_{ij} -> d_i + d_j over Z/2). This is injective on A, so two
// words are equal in A exactly when their boundaries agree.
using Word = std::vector<std::pair<int, int>>;

std::set<int> boundary(const Word& w) {
    std::set<int> s;
    for (auto [i, j] : w)
        for (int x : {i, j})
            if (!s.erase(x)) s.insert(x);
    return s;
}

AElement eval(const Word& w) {
    AElement r;
    for (auto [i, j] : w) r *= generator(i, j);
    return r;
}

std::set<int> boundary_of(const AElement& x) {
    Word w;
    for (int c : x.support()) w.push_back({c, c + 1});
    return boundary(w);
}
}  // namespace

TEST(GroupA, GeneratorExamples) {
    EXPECT_TRUE(generator(3, 3).is_identity());
    EXPECT_EQ(generator(-2, 1), (AElement{-2, -1, 0}));
    EXPECT_EQ(generator(1, -2), generator(-2, 1));
    EXPECT_EQ(generator(0, 1), (AElement{0}));
    EXPECT_EQ(generator(-1, 0), (AElement{-1}));
}

TEST(GroupA, RemarkValues) {
    EXPECT_EQ(generator(-2, 1).coords(), (std::vector<int>{-2, -1, 0}));
    EXPECT_EQ((generator(-2, 3) * generator(1, 2)).coords(), (std::vector<int>{-2, -1, 0, 2}));
}

TEST(GroupA, Multiply) {
    auto x = generator(-3, 4);
    EXPECT_TRUE((x * x).is_identity());
    EXPECT_EQ(generator(0, 1) * generator(1, 2), generator(0, 2));
    EXPECT_EQ(multiply(x, AElement{}), x);
}

TEST(GroupA, RelationsExhaustive) {
    for (int i = -5; i <= 5; ++i) {
        EXPECT_TRUE(generator(i, i).is_identity());
        for (int j = -5; j <= 5; ++j) {
            EXPECT_TRUE((generator(i, j) * generator(i, j)).is_identity());
            EXPECT_EQ(generator(i, j), generator(j, i));
            for (int k = -5; k <= 5; ++k) {
                EXPECT_EQ(generator(i, j) * generator(j, k), generator(i, k));
                for (int l = -5; l <= 5; l += 2)
                    EXPECT_EQ(generator(i, j) * generator(k, l), generator(k, l) * generator(i, j));
            }
        }
    }
}

TEST(GroupA, AgreesWithBoundaryOracle) {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 2000; ++t) {
        Word w1, w2;
        int n1 = static_cast<int>(rng() % 7), n2 = static_cast<int>(rng() % 7);
        for (int k = 0; k < n1; ++k) w1.push_back({static_cast<int>(rng() % 9) - 4, static_cast<int>(rng() % 9) - 4});
        for (int k = 0; k < n2; ++k) w2.push_back({static_cast<int>(rng() % 9) - 4, static_cast<int>(rng() % 9) - 4});
        EXPECT_EQ(eval(w1) == eval(w2), boundary(w1) == boundary(w2));
        EXPECT_EQ(boundary_of(eval(w1)), boundary(w1));
    }
}

TEST(GroupA, Str) {
    EXPECT_EQ(AElement{}.str(), "1");
    EXPECT_EQ((generator(1, 7) * generator(-3, -5)).str(), "A_{-5,-3}A_{1,7}");
}

TEST(GroupA, ShiftAndReflect) {
    for (int i = -4; i <= 4; ++i) {
        EXPECT_EQ(shift(generator(i, i + 1)), generator(i - 1, i));
        EXPECT_EQ(reflect(generator(i, i + 1)), generator(-i - 1, -i));
        for (int j = -4; j <= 4; ++j) EXPECT_EQ(reflect(generator(i, j)), generator(-i, -j));
    }
    auto x = generator(-2, 3) * generator(1, 2);
    EXPECT_EQ(reflect(reflect(x)), x);
    EXPECT_EQ(reflect(x * generator(0, 4)), reflect(x) * reflect(generator(0, 4)));
    EXPECT_EQ(shift(x * generator(0, 4)), shift(x) * shift(generator(0, 4)));
}

TEST(GroupA, Parity) {
    EXPECT_EQ(support_parity(AElement{}), Parity::even);
    EXPECT_EQ(support_parity(generator(0, 3)), Parity::odd);
    EXPECT_EQ(support_parity(generator(0, 2)), Parity::even);
}
