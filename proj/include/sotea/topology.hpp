#pragma once

#include <cstddef>
#include <vector>

#include "sotea/graph.hpp"
#include "sotea/random.hpp"

namespace sotea {

// Population ranks, 1 = best, N = worst. Always a permutation of 1..N.
class RankTable {
public:
    RankTable() = default;

    // `order` lists node indices best first.
    static RankTable from_order(const std::vector<std::size_t>& order);
    // Rank i + 1 for node i.
    static RankTable identity(std::size_t n);

    std::size_t size() const { return rank_.size(); }
    int rank(NodeId i) const { return rank_.at(i); }
    const std::vector<int>& ranks() const { return rank_; }

private:
    std::vector<int> rank_;
};

struct SetPointPolicy {
    int k_min = 3;
    int k_max = 7;
};

// K_Set = K_Min + (K_Max - K_Min) * ((N - rank) / N)^2
double degree_set_point(const SetPointPolicy& policy, int rank, std::size_t n);

// W_jk = rank_j * rank_k / N^2
double clustering_weight(int rank_j, int rank_k, std::size_t n);

// Sum of rank_j * rank_k over connected, unordered neighbour pairs {j, k} of i.
// c*_i = 2 * mass / (N^2 * k_i * (k_i - 1)).
long long weighted_triangle_mass(const PopulationGraph& g, const RankTable& ranks, NodeId i);

// Rank-weighted clustering coefficient c*_i; 0 when k_i < 2.
double weighted_clustering(const PopulationGraph& g, const RankTable& ranks, NodeId i);

inline constexpr int kRuleAttempts = 10;

bool add_link_rule(PopulationGraph& g, const RankTable& ranks, const SetPointPolicy& policy,
                   NodeId n1, Rng& rng, int attempts = kRuleAttempts);

bool remove_link_rule(PopulationGraph& g, const RankTable& ranks, const SetPointPolicy& policy,
                      NodeId n1, Rng& rng, int attempts = kRuleAttempts);

bool transfer_link_rule(PopulationGraph& g, const RankTable& ranks, const SetPointPolicy& policy,
                        NodeId n1, Rng& rng, int attempts = kRuleAttempts);

struct TopologyStepOutcome {
    bool added = false;
    bool removed = false;
    bool transferred = false;
};

// Add, remove, then transfer for node n1.
TopologyStepOutcome apply_topology_step(PopulationGraph& g, const RankTable& ranks,
                                        const SetPointPolicy& policy, NodeId n1, Rng& rng);

}  // namespace sotea
