#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "sotea/stats.hpp"

using namespace sotea;

namespace {

// P(U <= observed) by walking every bitmask of first-sample membership,
// with U counted pair by pair.
double exact_oracle(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> all(a);
    all.insert(all.end(), b.begin(), b.end());
    const std::size_t n = all.size(), na = a.size();
    auto u_of = [&](unsigned mask) {
        double u = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(mask >> i & 1u)) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (mask >> j & 1u) continue;
                u += all[i] > all[j] ? 1.0 : all[i] == all[j] ? 0.5 : 0.0;
            }
        }
        return u;
    };
    const double observed = u_of((1u << na) - 1u);
    std::size_t total = 0, hits = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != na) continue;
        ++total;
        hits += u_of(mask) <= observed + 1e-9;
    }
    return static_cast<double>(hits) / static_cast<double>(total);
}

std::vector<double> draw(std::mt19937_64& rng, std::size_t n, int levels) {
    std::uniform_int_distribution<int> d(0, levels - 1);
    std::vector<double> v(n);
    for (auto& x : v) x = d(rng);
    return v;
}

}  // namespace

TEST(MannWhitney, DisjointPairs) {
    std::vector<double> a{1, 2}, b{3, 4};
    auto t = mann_whitney_u(a, b);
    EXPECT_DOUBLE_EQ(t.u, 0.0);
    EXPECT_TRUE(t.exact);
    EXPECT_NEAR(t.p, 1.0 / 6.0, 1e-15);
    EXPECT_NEAR(mann_whitney_u(b, a).p, 1.0, 1e-15);
}

TEST(MannWhitney, IdenticalSamplesCarryNoEvidence) {
    std::vector<double> a{5, 5, 5}, b{5, 5};
    EXPECT_DOUBLE_EQ(mann_whitney_u(a, b).p, 0.5);
    std::vector<double> big(40, 1.0);
    EXPECT_DOUBLE_EQ(mann_whitney_u(big, big).p, 0.5);
}

TEST(MannWhitney, LargeDisjointSamples) {
    std::vector<double> a, b;
    for (int i = 0; i < 30; ++i) {
        a.push_back(i);
        b.push_back(100 + i);
    }
    auto t = mann_whitney_u(a, b);
    EXPECT_FALSE(t.exact);
    EXPECT_LT(t.p, 1e-4);
    EXPECT_GT(mann_whitney_u(b, a).p, 0.9999);
}

TEST(MannWhitney, InfinityRanksLast) {
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> a{1, 2, 3}, b{inf, inf, inf};
    EXPECT_NEAR(mann_whitney_u(a, b).p, 1.0 / 20.0, 1e-15);
}

TEST(MannWhitney, RejectsBadInput) {
    std::vector<double> empty, one{1}, nan{std::nan("")};
    EXPECT_THROW(mann_whitney_u(empty, one), std::invalid_argument);
    EXPECT_THROW(mann_whitney_u(one, nan), std::invalid_argument);
}

TEST(MannWhitney, ExactMatchesBitmaskOracleExhaustively) {
    std::mt19937_64 rng(3);
    for (std::size_t na = 1; na <= 11; ++na)
        for (std::size_t nb = 1; na + nb <= kExactUTestLimit; ++nb)
            for (int rep = 0; rep < 4; ++rep) {
                auto a = draw(rng, na, rep % 2 ? 4 : 1000);
                auto b = draw(rng, nb, rep % 2 ? 4 : 1000);
                EXPECT_NEAR(mann_whitney_u(a, b).p, exact_oracle(a, b), 1e-12) << na << "," << nb;
            }
}

TEST(MannWhitney, NormalApproximationCloseToExactForThreeOrMore) {
    std::mt19937_64 rng(5);
    double worst = 0;
    for (std::size_t na = 3; na <= 9; ++na)
        for (std::size_t nb = 3; na + nb <= kExactUTestLimit; ++nb)
            for (int rep = 0; rep < 20; ++rep) {
                auto a = draw(rng, na, 1 << 30);
                auto b = draw(rng, nb, 1 << 30);
                worst = std::max(worst, std::abs(mann_whitney_normal_p(a, b) - mann_whitney_exact_p(a, b)));
            }
    EXPECT_LE(worst, 0.02);
}

TEST(Midranks, Ties) {
    std::vector<double> v{3, 1, 3, 2};
    EXPECT_EQ(midranks(v), (std::vector<double>{3.5, 1, 3.5, 2}));
}

TEST(Median, OddEvenAndEmpty) {
    EXPECT_DOUBLE_EQ(median({3, 1, 2}), 2);
    EXPECT_DOUBLE_EQ(median({4, 1, 3, 2}), 2.5);
    EXPECT_DOUBLE_EQ(median({7}), 7);
    const double inf = std::numeric_limits<double>::infinity();
    EXPECT_EQ(median({1, inf, inf}), inf);
    EXPECT_THROW(median({}), std::invalid_argument);
}
