#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <queue>
#include <stdexcept>

#include "sotea/graph.hpp"

using namespace sotea;

namespace {

// Floyd-Warshall over the edge list, independent of the graph's own BFS.
double mean_path_length_oracle(const PopulationGraph& g) {
    const std::size_t n = g.size();
    const int inf = 1 << 20;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
    for (auto [a, b] : g.edges()) d[a][b] = d[b][a] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    double total = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) total += d[i][j];
    return total / (n * (n - 1) / 2.0);
}

}  // namespace

TEST(Ring, EveryNodeHasDegreeTwo) {
    auto g = PopulationGraph::ring(50);
    for (NodeId i = 0; i < 50; ++i) {
        EXPECT_EQ(g.degree(i), 2u);
        EXPECT_TRUE(g.has_edge(i, (i + 1) % 50));
        EXPECT_TRUE(g.has_edge(i, (i + 49) % 50));
    }
    EXPECT_EQ(g.edge_count(), 50u);
    EXPECT_TRUE(is_connected(g));
}

TEST(Ring, ThreeNodesFormTriangle) {
    auto g = PopulationGraph::ring(3);
    EXPECT_EQ(g, PopulationGraph::complete(3));
}

TEST(Ring, PathLengthOfFiftyRing) {
    // Sum over distances d=1..24 of 50*d plus 25*25 for the antipodes.
    double l = mean_path_length_oracle(PopulationGraph::ring(50));
    EXPECT_NEAR(l, 15625.0 / 1225.0, 1e-12);
    EXPECT_NEAR(l, 12.755, 5e-4);
}

TEST(Ring, RejectsTooFewNodes) {
    EXPECT_THROW(PopulationGraph::ring(2), std::invalid_argument);
    EXPECT_THROW(PopulationGraph::ring(0), std::invalid_argument);
}

TEST(Degree, CountsNeighbours) {
    auto ring = PopulationGraph::ring(10);
    for (NodeId i = 0; i < 10; ++i) EXPECT_EQ(ring.degree(i), 2u);
    auto full = PopulationGraph::complete(50);
    for (NodeId i = 0; i < 50; ++i) EXPECT_EQ(full.degree(i), 49u);
    auto g = PopulationGraph::from_edges(3, {{0, 1}, {0, 2}});
    EXPECT_EQ(g.degree(0), 2u);
    EXPECT_EQ(g.degree(1), 1u);
}

TEST(Degree, HandshakeLemma) {
    auto g = PopulationGraph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}});
    std::size_t sum = 0;
    for (NodeId i = 0; i < g.size(); ++i) sum += g.degree(i);
    EXPECT_EQ(sum, 2 * g.edge_count());
}

TEST(Degree, OutOfRangeNodeThrows) {
    auto g = PopulationGraph::ring(5);
    EXPECT_THROW(g.degree(5), std::out_of_range);
    EXPECT_THROW(g.neighbors(7), std::out_of_range);
    EXPECT_THROW(g.has_edge(0, 9), std::out_of_range);
}

TEST(Mutation, AddAndRemoveAreInverse) {
    auto g = PopulationGraph::ring(5);
    const auto original = g;
    g.add_edge(0, 2);
    EXPECT_EQ(g.degree(0), 3u);
    EXPECT_EQ(g.degree(2), 3u);
    EXPECT_TRUE(g.has_edge(2, 0));
    g.remove_edge(2, 0);
    EXPECT_EQ(g, original);
    g.remove_edge(0, 1);
    g.add_edge(1, 0);
    EXPECT_EQ(g, original);
}

TEST(Mutation, PreconditionErrors) {
    auto g = PopulationGraph::ring(5);
    EXPECT_THROW(g.add_edge(1, 1), std::invalid_argument);
    EXPECT_THROW(g.add_edge(0, 1), std::invalid_argument);
    EXPECT_THROW(g.remove_edge(0, 2), std::invalid_argument);
    EXPECT_THROW(g.remove_edge(3, 3), std::invalid_argument);
}

TEST(Mutation, SymmetryAfterRandomEdits) {
    Rng rng(7);
    PopulationGraph g(12);
    for (int step = 0; step < 2000; ++step) {
        NodeId a = uniform_index(rng, 12);
        NodeId b = uniform_index(rng, 12);
        if (a == b) continue;
        if (g.has_edge(a, b)) g.remove_edge(a, b); else g.add_edge(a, b);
        for (NodeId i = 0; i < 12; ++i) {
            EXPECT_FALSE(g.has_edge(i, i));
            for (NodeId j : g.neighbors(i)) EXPECT_TRUE(g.has_edge(j, i));
        }
    }
}

TEST(Connectivity, Examples) {
    EXPECT_TRUE(is_connected(PopulationGraph::ring(50)));
    auto two = PopulationGraph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    EXPECT_FALSE(is_connected(two));
    auto path = PopulationGraph::ring(50);
    path.remove_edge(10, 11);
    EXPECT_TRUE(is_connected(path));
}

TEST(Connectivity, LargestComponentRenumbers) {
    auto g = PopulationGraph::from_edges(7, {{0, 5}, {2, 3}, {3, 4}, {4, 2}, {4, 6}});
    auto labels = component_labels(g);
    EXPECT_EQ(labels[0], labels[5]);
    EXPECT_NE(labels[0], labels[2]);
    auto big = largest_component(g);
    EXPECT_EQ(big.size(), 4u);
    EXPECT_EQ(big.edge_count(), 4u);
    EXPECT_TRUE(is_connected(big));
    // Original nodes 2,3,4,6 become 0,1,2,3.
    EXPECT_TRUE(big.has_edge(2, 3));
}

TEST(Walk, RingOfFiveOutcomesAreUniform) {
    auto g = PopulationGraph::ring(5);
    Rng rng(11);
    const int samples = 40000;
    std::map<std::pair<NodeId, NodeId>, int> counts;
    for (int s = 0; s < samples; ++s) {
        Walk w = two_step_walk(g, 0, rng);
        ++counts[{w.mid, w.end}];
    }
    ASSERT_EQ(counts.size(), 4u);
    const double p = 0.25;
    const double sigma = std::sqrt(samples * p * (1 - p));
    for (auto key : {std::pair<NodeId, NodeId>{1, 0}, {1, 2}, {4, 0}, {4, 3}}) {
        EXPECT_NEAR(counts[key], samples * p, 3 * sigma);
    }
}

TEST(Walk, TriangleReturnsHalfTheTime) {
    auto g = PopulationGraph::ring(3);
    Rng rng(3);
    const int samples = 20000;
    int back = 0;
    for (int s = 0; s < samples; ++s) back += two_step_walk(g, 0, rng).end == 0;
    const double sigma = std::sqrt(samples * 0.25);
    EXPECT_NEAR(back, samples / 2.0, 3 * sigma);
}

TEST(Walk, StarLeafAlwaysPassesCentre) {
    auto g = PopulationGraph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    Rng rng(5);
    for (int s = 0; s < 1000; ++s) EXPECT_EQ(two_step_walk(g, 3, rng).mid, 0u);
}

TEST(Walk, IsolatedStartThrows) {
    PopulationGraph g(4);
    g.add_edge(1, 2);
    Rng rng(1);
    EXPECT_THROW(two_step_walk(g, 0, rng), std::logic_error);
}

TEST(Dot, PlainGraphSyntax) {
    auto g = PopulationGraph::from_edges(4, {{0, 1}, {1, 2}});
    std::string dot = to_dot(g);
    EXPECT_NE(dot.find("graph"), std::string::npos);
    EXPECT_NE(dot.find("0 -- 1;"), std::string::npos);
    EXPECT_NE(dot.find("1 -- 2;"), std::string::npos);
    EXPECT_NE(dot.find("  3;"), std::string::npos);
}
