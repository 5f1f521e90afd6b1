#include <gtest/gtest.h>

#include "rsperm/permutation.hpp"
#include "rsperm/random.hpp"

using namespace rsperm;

TEST(Permutation, Validation) {
    EXPECT_THROW(Permutation({0, 0, 1}), std::invalid_argument);
    EXPECT_THROW(Permutation({0, 3, 1}), std::invalid_argument);
    EXPECT_THROW(Permutation::from_one_based({0, 1}), std::invalid_argument);
    EXPECT_THROW(Permutation::from_cycles(3, {{1, 4}}), std::invalid_argument);
    EXPECT_THROW(Permutation::from_cycles(3, {{1, 2, 1}}), std::invalid_argument);
    EXPECT_NO_THROW(Permutation({}));
}

TEST(Permutation, CompositionConvention) {
    // (a * b)(i) = a(b(i))
    const auto a = Permutation::from_cycles(3, {{1, 2}});
    const auto b = Permutation::from_cycles(3, {{2, 3}});
    const auto ab = a * b;
    EXPECT_EQ(ab(0), a(b(0)));
    EXPECT_EQ(ab(1), a(b(1)));
    EXPECT_EQ(ab(2), a(b(2)));
    // 1 -> 1 -> 2, 2 -> 3 -> 3, 3 -> 2 -> 1
    EXPECT_EQ(ab, Permutation::from_one_based({2, 3, 1}));
    EXPECT_EQ(ab.cycle_string(), "(1 2 3)");
    EXPECT_EQ((b * a).cycle_string(), "(1 3 2)");
    EXPECT_EQ(compose(a, b), ab);
}

TEST(Permutation, ActionAntiComposes) {
    Rng rng(17);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 1 + rng.below(8);
        const auto a = random_permutation(n, rng);
        const auto b = random_permutation(n, rng);
        std::vector<int> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(rng.below(1000));
        EXPECT_EQ(permute(v, a * b), permute(permute(v, a), b));
        EXPECT_EQ(permute(permute(v, a), a.inverse()), v);
        EXPECT_TRUE((a * a.inverse()).is_identity());
        EXPECT_TRUE((a.inverse() * a).is_identity());
    }
}

TEST(Permutation, Display) {
    EXPECT_EQ(Permutation::identity(4).to_string(), "[1,2,3,4]");
    EXPECT_EQ(Permutation::identity(4).cycle_string(), "()");
    const auto p = Permutation::from_one_based({2, 3, 1, 4});
    EXPECT_EQ(p.to_string(), "[2,3,1,4]");
    EXPECT_EQ(p.cycle_string(), "(1 2 3)");
    EXPECT_EQ(Permutation::from_one_based({2, 1, 4, 3}).cycle_string(), "(1 2)(3 4)");
    EXPECT_EQ(p.one_based(), (std::vector<std::size_t>{2, 3, 1, 4}));
}

TEST(Permutation, CyclesRoundTrip) {
    // Cycles multiply right to left.
    EXPECT_EQ(Permutation::from_cycles(3, {{1, 2}, {2, 3}}), Permutation::from_cycles(3, {{1, 2}}) *
                                                                  Permutation::from_cycles(3, {{2, 3}}));
    Rng rng(19);
    for (int t = 0; t < 100; ++t) {
        const auto p = random_permutation(1 + rng.below(9), rng);
        std::vector<std::vector<std::size_t>> cycles;
        std::vector<bool> seen(p.size(), false);
        for (std::size_t s = 0; s < p.size(); ++s) {
            if (seen[s]) continue;
            std::vector<std::size_t> c;
            for (std::size_t i = s; !seen[i]; i = p(i)) {
                seen[i] = true;
                c.push_back(i + 1);
            }
            cycles.push_back(std::move(c));
        }
        EXPECT_EQ(Permutation::from_cycles(p.size(), cycles), p);
    }
}

TEST(Permutation, OrderingIsLexicographicOnImages) {
    EXPECT_LT(Permutation::identity(3), Permutation::from_one_based({1, 3, 2}));
    EXPECT_LT(Permutation::from_one_based({1, 3, 2}), Permutation::from_one_based({2, 1, 3}));
}
