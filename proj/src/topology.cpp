#include "sotea/topology.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace sotea {

RankTable RankTable::from_order(const std::vector<std::size_t>& order) {
    RankTable t;
    t.rank_.assign(order.size(), 0);
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        std::size_t node = order[pos];
        if (node >= order.size() || t.rank_[node] != 0) {
            throw std::invalid_argument("RankTable: order is not a permutation");
        }
        t.rank_[node] = static_cast<int>(pos + 1);
    }
    return t;
}

RankTable RankTable::identity(std::size_t n) {
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    return from_order(order);
}

double degree_set_point(const SetPointPolicy& policy, int rank, std::size_t n) {
    if (rank < 1 || static_cast<std::size_t>(rank) > n) {
        throw std::invalid_argument("degree_set_point: rank out of range");
    }
    if (policy.k_min > policy.k_max) {
        throw std::invalid_argument("degree_set_point: k_min exceeds k_max");
    }
    double frac = static_cast<double>(n - static_cast<std::size_t>(rank)) / static_cast<double>(n);
    return policy.k_min + (policy.k_max - policy.k_min) * frac * frac;
}

double clustering_weight(int rank_j, int rank_k, std::size_t n) {
    if (rank_j < 1 || rank_k < 1 || static_cast<std::size_t>(rank_j) > n ||
        static_cast<std::size_t>(rank_k) > n) {
        throw std::invalid_argument("clustering_weight: rank out of range");
    }
    double nn = static_cast<double>(n);
    return static_cast<double>(rank_j) * static_cast<double>(rank_k) / (nn * nn);
}

long long weighted_triangle_mass(const PopulationGraph& g, const RankTable& ranks, NodeId i) {
    const auto& nb = g.neighbors(i);
    long long mass = 0;
    for (std::size_t a = 0; a < nb.size(); ++a) {
        for (std::size_t b = a + 1; b < nb.size(); ++b) {
            if (g.has_edge(nb[a], nb[b])) {
                mass += static_cast<long long>(ranks.rank(nb[a])) * ranks.rank(nb[b]);
            }
        }
    }
    return mass;
}

double weighted_clustering(const PopulationGraph& g, const RankTable& ranks, NodeId i) {
    std::size_t k = g.degree(i);
    if (k < 2) return 0.0;
    double n = static_cast<double>(ranks.size());
    double mass = static_cast<double>(weighted_triangle_mass(g, ranks, i));
    return 2.0 * mass / (n * n * static_cast<double>(k) * static_cast<double>(k - 1));
}

namespace {

__extension__ typedef __int128 Wide;

struct Fraction {
    Wide num;
    Wide den;
};

// Sum over the given nodes of mass_i / (k_i (k_i - 1)), exact.
// Proportional to the sum of c* (common factor 2 / N^2 dropped).
Fraction clustering_sum(const PopulationGraph& g, const RankTable& ranks,
                        const std::array<NodeId, 3>& nodes) {
    Fraction total{0, 1};
    for (NodeId v : nodes) {
        std::size_t k = g.degree(v);
        if (k < 2) continue;
        Wide num = weighted_triangle_mass(g, ranks, v);
        Wide den = static_cast<Wide>(k) * static_cast<Wide>(k - 1);
        total.num = total.num * den + num * total.den;
        total.den *= den;
    }
    return total;
}

bool greater(const Fraction& a, const Fraction& b) {
    return a.num * b.den > b.num * a.den;
}

double set_point(const SetPointPolicy& policy, const RankTable& ranks, NodeId i) {
    return degree_set_point(policy, ranks.rank(i), ranks.size());
}

bool below_set_point(const PopulationGraph& g, const SetPointPolicy& policy, const RankTable& ranks,
                     NodeId i) {
    return static_cast<double>(g.degree(i)) < set_point(policy, ranks, i);
}

bool above_set_point(const PopulationGraph& g, const SetPointPolicy& policy, const RankTable& ranks,
                     NodeId i) {
    return static_cast<double>(g.degree(i)) > set_point(policy, ranks, i);
}

}  // namespace

bool add_link_rule(PopulationGraph& g, const RankTable& ranks, const SetPointPolicy& policy,
                   NodeId n1, Rng& rng, int attempts) {
    if (g.degree(n1) == 0 || !below_set_point(g, policy, ranks, n1)) return false;
    for (int a = 0; a < attempts; ++a) {
        auto [n2, n3] = two_step_walk(g, n1, rng);
        if (n3 == n1 || g.has_edge(n1, n3)) continue;
        if (!below_set_point(g, policy, ranks, n3)) continue;
        g.add_edge(n1, n3);
        return true;
    }
    return false;
}

bool remove_link_rule(PopulationGraph& g, const RankTable& ranks, const SetPointPolicy& policy,
                      NodeId n1, Rng& rng, int attempts) {
    if (!above_set_point(g, policy, ranks, n1)) return false;
    for (int a = 0; a < attempts; ++a) {
        auto [n2, n3] = two_step_walk(g, n1, rng);
        if (n3 == n1 || !g.has_edge(n1, n3)) continue;
        if (!above_set_point(g, policy, ranks, n3)) continue;
        // n2 stays adjacent to both endpoints, so no fragmentation.
        g.remove_edge(n1, n3);
        return true;
    }
    return false;
}

bool transfer_link_rule(PopulationGraph& g, const RankTable& ranks, const SetPointPolicy& policy,
                        NodeId n1, Rng& rng, int attempts) {
    if (g.degree(n1) == 0) return false;
    for (int a = 0; a < attempts; ++a) {
        auto [n2, n3] = two_step_walk(g, n1, rng);
        if (n3 == n1 || g.has_edge(n1, n3)) continue;
        if (!below_set_point(g, policy, ranks, n3)) continue;

        const std::array<NodeId, 3> nodes{n1, n2, n3};
        Fraction before = clustering_sum(g, ranks, nodes);
        g.remove_edge(n1, n2);
        g.add_edge(n1, n3);
        Fraction after = clustering_sum(g, ranks, nodes);
        if (greater(after, before)) return true;
        g.remove_edge(n1, n3);
        g.add_edge(n1, n2);
    }
    return false;
}

TopologyStepOutcome apply_topology_step(PopulationGraph& g, const RankTable& ranks,
                                        const SetPointPolicy& policy, NodeId n1, Rng& rng) {
    TopologyStepOutcome out;
    out.added = add_link_rule(g, ranks, policy, n1, rng);
    out.removed = remove_link_rule(g, ranks, policy, n1, rng);
    out.transferred = transfer_link_rule(g, ranks, policy, n1, rng);
    return out;
}

}  // namespace sotea
