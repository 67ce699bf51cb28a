#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <stdexcept>

#include "sotea/growth.hpp"

using namespace sotea;

namespace {

void expect_within_3_sigma(double count, double trials, double p) {
    EXPECT_NEAR(count, trials * p, 3 * std::sqrt(trials * p * (1 - p)) + 1e-9);
}

}  // namespace

TEST(Config, Validation) {
    GrowthConfig c;
    c.model = GrowthModel::ba;
    c.ba = {3, 3};
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c.ba = {3, 2};
    c.target_n = 3;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c.target_n = 4;
    EXPECT_NO_THROW(c.validate());
    c.model = GrowthModel::dd;
    c.dd.delta = 1.5;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c.model = GrowthModel::fitness;
    c.fitness.x_max = 0;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    EXPECT_EQ(growth_model_from_string("dd"), GrowthModel::dd);
    EXPECT_FALSE(growth_model_from_string("er"));
    EXPECT_EQ(fitness_distribution_from_string("uniform"), FitnessDistribution::uniform);
}

TEST(Ba, SeedTriangleUniformFirstAttachment) {
    auto g = PopulationGraph::ring(3);
    Rng rng(1);
    const int trials = 30000;
    std::array<int, 3> hits{};
    for (int t = 0; t < trials; ++t) ++hits[preferential_targets(g, 3, 1, rng)[0]];
    for (int h : hits) expect_within_3_sigma(h, trials, 1.0 / 3.0);
}

TEST(Ba, AttachmentFollowsDegreeOnFrozenSnapshot) {
    Rng grow(5);
    auto g = ba_grow({4, 2}, 40, grow);
    double total = 2.0 * g.edge_count();
    Rng rng(9);
    const int trials = 100000;
    std::vector<int> hits(g.size(), 0);
    for (int t = 0; t < trials; ++t) ++hits[preferential_targets(g, g.size(), 1, rng)[0]];
    for (NodeId i = 0; i < g.size(); ++i) expect_within_3_sigma(hits[i], trials, g.degree(i) / total);
}

TEST(Ba, TargetsAreDistinct) {
    auto g = PopulationGraph::ring(5);
    Rng rng(2);
    for (int t = 0; t < 1000; ++t) {
        auto v = preferential_targets(g, 5, 4, rng);
        std::sort(v.begin(), v.end());
        EXPECT_EQ(std::unique(v.begin(), v.end()), v.end());
    }
    EXPECT_THROW(preferential_targets(g, 5, 6, rng), std::invalid_argument);
}

TEST(Ba, EdgeCountAndConnectivity) {
    Rng rng(3);
    for (std::size_t m0 : {3u, 5u}) {
        for (std::size_t m = 1; m < m0; ++m) {
            auto g = ba_grow({m0, m}, 300, rng);
            EXPECT_EQ(g.edge_count(), m0 + m * (300 - m0));
            EXPECT_TRUE(is_connected(g));
            for (NodeId i = m0; i < 300; ++i) EXPECT_GE(g.degree(i), m);
        }
    }
}

TEST(Ba, ScaleFreeTail) {
    Rng rng(17);
    auto g = ba_grow({3, 2}, 10000, rng);
    auto tail = degree_tail_exponent(g, 2);
    ASSERT_TRUE(tail);
    EXPECT_GE(tail->gamma, 2.0);
    EXPECT_LE(tail->gamma, 3.5);
}

TEST(Dd, FullLossNoNewLinksLeavesDuplicateIsolated) {
    Rng rng(4);
    PopulationGraph g(30);
    for (NodeId i = 0; i < 20; ++i) g.add_edge(i, (i + 1) % 20);
    for (std::size_t active = 20; active < 30; ++active) {
        dd_step(g, active, {1.0, 0.0, 5}, rng);
        EXPECT_EQ(g.degree(active), 0u);
    }
}

TEST(Dd, NoLossCopiesNeighbourhood) {
    Rng rng(6);
    auto base = PopulationGraph::from_edges(8, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0}});
    for (int t = 0; t < 200; ++t) {
        auto g = base;
        NodeId original = dd_step(g, 7, {0.0, 0.0, 5}, rng);
        EXPECT_EQ(g.neighbors(7), g.neighbors(original));
    }
}

TEST(Dd, DuplicateDegreeMatchesClosedForm) {
    // Given original o with degree k among N active nodes: inherited links are
    // Binomial(k, 1 - delta); every other active node is then linked with
    // probability alpha, so E[k_dup] = (1-d) k + alpha (N - (1-d) k).
    auto base = PopulationGraph::from_edges(
        11, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {3, 4}, {5, 6}, {6, 7}, {7, 8}, {8, 9}});
    const std::size_t active = 10;
    DdParams p{0.53, 2.0, 5};
    const double alpha = p.alpha_coeff / active;
    Rng rng(12);
    std::map<NodeId, std::pair<double, int>> acc;
    for (int t = 0; t < 200000; ++t) {
        auto g = base;
        NodeId o = dd_step(g, active, p, rng);
        acc[o].first += g.degree(active);
        ++acc[o].second;
    }
    ASSERT_EQ(acc.size(), active);
    for (const auto& [o, sum] : acc) {
        double k = base.degree(o);
        double inherit = (1 - p.delta) * k;
        double expected = inherit + alpha * (active - inherit);
        // Variance of the degree is bounded by k + N for a sum of Bernoullis.
        double tol = 4 * std::sqrt((k + active) / 4.0 / sum.second);
        EXPECT_NEAR(sum.first / sum.second, expected, tol) << "original " << o;
    }
}

TEST(Dd, GrowsToTargetAndFeedsMetrics) {
    Rng rng(8);
    auto g = dd_grow({}, 2000, rng);
    EXPECT_EQ(g.size(), 2000u);
    auto big = largest_component(g);
    EXPECT_GE(big.size(), 2u);
    if (big.size() >= 3 && mean_degree(big) > 1.0) {
        EXPECT_NO_THROW(analyze_topology(big));
    }
    EXPECT_LT(mean_degree(g), 10.0);
}

TEST(FitnessModel, ExtremeValues) {
    Rng rng(1);
    std::vector<double> top(30, 10.0);
    EXPECT_EQ(fitness_model_from_values(top, 10.0, rng), PopulationGraph::complete(30));
    std::vector<double> x(30, 10.0);
    x[4] = 0.0;
    for (int t = 0; t < 20; ++t) EXPECT_EQ(fitness_model_from_values(x, 10.0, rng).degree(4), 0u);
    EXPECT_DOUBLE_EQ(fitness_link_probability(10, 10, 10), 1.0);
    EXPECT_DOUBLE_EQ(fitness_link_probability(5, 4, 10), 0.2);
    EXPECT_THROW(fitness_model_from_values(std::vector<double>{1.0}, 10.0, rng), std::invalid_argument);
}

TEST(FitnessModel, PairwiseLinkRateByBin) {
    // Four fitness levels, 50 nodes each; link rate per level pair is x_a x_b / x_M^2.
    const std::vector<double> levels{2.5, 5.0, 7.5, 10.0};
    std::vector<double> x;
    for (double v : levels) x.insert(x.end(), 50, v);
    Rng rng(3);
    std::array<std::array<double, 4>, 4> links{}, pairs{};
    for (int rep = 0; rep < 20; ++rep) {
        auto g = fitness_model_from_values(x, 10.0, rng);
        for (NodeId i = 0; i < x.size(); ++i)
            for (NodeId j = i + 1; j < x.size(); ++j) {
                std::size_t a = i / 50, b = j / 50;
                pairs[a][b] += 1;
                links[a][b] += g.has_edge(i, j);
            }
    }
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = a; b < 4; ++b) {
            double p = levels[a] * levels[b] / 100.0;
            expect_within_3_sigma(links[a][b], pairs[a][b], p);
        }
}

TEST(FitnessModel, DrawsRespectSupport) {
    Rng rng(7);
    FitnessParams p;
    double mean = 0;
    const int draws = 100000;
    for (int i = 0; i < draws; ++i) {
        double v = draw_intrinsic_fitness(p, rng);
        ASSERT_GE(v, 0.0);
        ASSERT_LE(v, p.x_max);
        mean += v / draws;
    }
    // Truncated exponential mean: 1 - x e^-x / (1 - e^-x) at x = 10.
    double expected = 1.0 - 10.0 * std::exp(-10.0) / (1.0 - std::exp(-10.0));
    EXPECT_NEAR(mean, expected, 0.02);
    p.rho = FitnessDistribution::uniform;
    for (int i = 0; i < 1000; ++i) {
        double v = draw_intrinsic_fitness(p, rng);
        ASSERT_GE(v, 0.0);
        ASSERT_LE(v, 10.0);
    }
}

TEST(FitnessModel, GenerateSize) {
    Rng rng(2);
    FitnessParams p;
    p.n = 400;
    auto g = fitness_model_generate(p, rng);
    EXPECT_EQ(g.size(), 400u);
}

TEST(Tail, TooFewBins) {
    EXPECT_FALSE(degree_tail_exponent(PopulationGraph::ring(100), 1));
    EXPECT_THROW(degree_tail_exponent(PopulationGraph::ring(10), 0), std::invalid_argument);
}
