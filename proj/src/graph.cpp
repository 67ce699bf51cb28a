#include "sotea/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace sotea {

PopulationGraph::PopulationGraph(std::size_t n) : adjacency_(n) {
    if (n == 0) {
        throw std::invalid_argument("PopulationGraph: node count must be positive");
    }
}

PopulationGraph PopulationGraph::ring(std::size_t n) {
    if (n < 3) {
        throw std::invalid_argument("ring: node count must be at least 3");
    }
    PopulationGraph g(n);
    for (NodeId i = 0; i < n; ++i) {
        g.add_edge(i, (i + 1) % n);
    }
    return g;
}

PopulationGraph PopulationGraph::complete(std::size_t n) {
    PopulationGraph g(n);
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = i + 1; j < n; ++j) {
            g.add_edge(i, j);
        }
    }
    return g;
}

PopulationGraph PopulationGraph::from_edges(std::size_t n, const std::vector<Edge>& edges) {
    PopulationGraph g(n);
    for (const auto& [i, j] : edges) {
        g.add_edge(i, j);
    }
    return g;
}

void PopulationGraph::check_node(NodeId i) const {
    if (i >= adjacency_.size()) {
        throw std::out_of_range("PopulationGraph: invalid node " + std::to_string(i));
    }
}

std::size_t PopulationGraph::degree(NodeId i) const {
    check_node(i);
    return adjacency_[i].size();
}

const std::vector<NodeId>& PopulationGraph::neighbors(NodeId i) const {
    check_node(i);
    return adjacency_[i];
}

bool PopulationGraph::has_edge(NodeId i, NodeId j) const {
    check_node(i);
    check_node(j);
    const auto& a = adjacency_[i];
    return std::binary_search(a.begin(), a.end(), j);
}

void PopulationGraph::add_edge(NodeId i, NodeId j) {
    check_node(i);
    check_node(j);
    if (i == j) {
        throw std::invalid_argument("add_edge: self-loop");
    }
    auto& a = adjacency_[i];
    auto pos = std::lower_bound(a.begin(), a.end(), j);
    if (pos != a.end() && *pos == j) {
        throw std::invalid_argument("add_edge: edge already present");
    }
    a.insert(pos, j);
    auto& b = adjacency_[j];
    b.insert(std::lower_bound(b.begin(), b.end(), i), i);
    ++edge_count_;
}

void PopulationGraph::remove_edge(NodeId i, NodeId j) {
    check_node(i);
    check_node(j);
    if (i == j) {
        throw std::invalid_argument("remove_edge: self-loop");
    }
    auto& a = adjacency_[i];
    auto pos = std::lower_bound(a.begin(), a.end(), j);
    if (pos == a.end() || *pos != j) {
        throw std::invalid_argument("remove_edge: edge not present");
    }
    a.erase(pos);
    auto& b = adjacency_[j];
    b.erase(std::lower_bound(b.begin(), b.end(), i));
    --edge_count_;
}

std::vector<Edge> PopulationGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (NodeId i = 0; i < adjacency_.size(); ++i) {
        for (NodeId j : adjacency_[i]) {
            if (i < j) out.emplace_back(i, j);
        }
    }
    return out;
}

Walk two_step_walk(const PopulationGraph& g, NodeId start, Rng& rng) {
    const auto& first = g.neighbors(start);
    if (first.empty()) {
        throw std::logic_error("two_step_walk: start node has no neighbours");
    }
    NodeId mid = first[uniform_index(rng, first.size())];
    const auto& second = g.neighbors(mid);
    NodeId end = second[uniform_index(rng, second.size())];
    return {mid, end};
}

std::vector<std::size_t> component_labels(const PopulationGraph& g) {
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> label(g.size(), unset);
    std::size_t next = 0;
    std::deque<NodeId> queue;
    for (NodeId s = 0; s < g.size(); ++s) {
        if (label[s] != unset) continue;
        label[s] = next;
        queue.push_back(s);
        while (!queue.empty()) {
            NodeId u = queue.front();
            queue.pop_front();
            for (NodeId v : g.neighbors(u)) {
                if (label[v] == unset) {
                    label[v] = next;
                    queue.push_back(v);
                }
            }
        }
        ++next;
    }
    return label;
}

bool is_connected(const PopulationGraph& g) {
    auto labels = component_labels(g);
    return std::all_of(labels.begin(), labels.end(), [](std::size_t l) { return l == 0; });
}

PopulationGraph largest_component(const PopulationGraph& g) {
    auto labels = component_labels(g);
    std::size_t count = *std::max_element(labels.begin(), labels.end()) + 1;
    std::vector<std::size_t> sizes(count, 0);
    for (auto l : labels) ++sizes[l];
    std::size_t best = static_cast<std::size_t>(
        std::max_element(sizes.begin(), sizes.end()) - sizes.begin());

    std::vector<NodeId> remap(g.size(), 0);
    std::size_t n = 0;
    for (NodeId i = 0; i < g.size(); ++i) {
        if (labels[i] == best) remap[i] = n++;
    }
    PopulationGraph sub(n);
    for (const auto& [i, j] : g.edges()) {
        if (labels[i] == best) sub.add_edge(remap[i], remap[j]);
    }
    return sub;
}

std::string to_dot(const PopulationGraph& g, const std::string& name) {
    std::ostringstream out;
    out << "graph";
    if (!name.empty()) out << ' ' << name;
    out << " {\n";
    for (NodeId i = 0; i < g.size(); ++i) {
        if (g.degree(i) == 0) out << "  " << i << ";\n";
    }
    for (const auto& [i, j] : g.edges()) {
        out << "  " << i << " -- " << j << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace sotea
