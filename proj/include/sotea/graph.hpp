#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "sotea/random.hpp"

namespace sotea {

using NodeId = std::size_t;
using Edge = std::pair<NodeId, NodeId>;

// Undirected simple graph over a fixed node set 0..n-1.
//
// Each node keeps a sorted neighbour vector, so membership is a binary search
// and uniform neighbour sampling is O(1). Symmetry and the absence of
// self-loops are maintained by every mutator.
class PopulationGraph {
public:
    explicit PopulationGraph(std::size_t n);

    static PopulationGraph ring(std::size_t n);
    static PopulationGraph complete(std::size_t n);
    static PopulationGraph from_edges(std::size_t n, const std::vector<Edge>& edges);

    std::size_t size() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    std::size_t degree(NodeId i) const;
    const std::vector<NodeId>& neighbors(NodeId i) const;
    bool has_edge(NodeId i, NodeId j) const;

    void add_edge(NodeId i, NodeId j);
    void remove_edge(NodeId i, NodeId j);

    // Edges as (i, j) with i < j, lexicographically ordered.
    std::vector<Edge> edges() const;

    friend bool operator==(const PopulationGraph&, const PopulationGraph&) = default;

private:
    void check_node(NodeId i) const;

    std::vector<std::vector<NodeId>> adjacency_;
    std::size_t edge_count_ = 0;
};

struct Walk {
    NodeId mid;
    NodeId end;
};

// Two uniform neighbour hops from `start`. The end node may equal `start`;
// callers filter.
Walk two_step_walk(const PopulationGraph& g, NodeId start, Rng& rng);

bool is_connected(const PopulationGraph& g);

// Component label per node, labels assigned in order of lowest member.
std::vector<std::size_t> component_labels(const PopulationGraph& g);

// Induced subgraph on the largest connected component (ties: lowest label),
// nodes renumbered in increasing original order.
PopulationGraph largest_component(const PopulationGraph& g);

// Plain `graph { a -- b; }` DOT text.
std::string to_dot(const PopulationGraph& g, const std::string& name = "");

}  // namespace sotea
