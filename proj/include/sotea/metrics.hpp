#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "sotea/graph.hpp"
#include "sotea/problems.hpp"

namespace sotea {

// Mean shortest-path length over all C(n,2) node pairs, by BFS from every
// node. Throws std::invalid_argument for a disconnected graph or n < 2.
double characteristic_path_length(const PopulationGraph& g);

// c_i = 2 e_i / (k_i (k_i - 1)) with e_i the number of links among the
// neighbours of i; 0 when k_i < 2.
double clustering_coefficient(const PopulationGraph& g, NodeId i);
double average_clustering(const PopulationGraph& g);

double mean_degree(const PopulationGraph& g);

// counts[k] = number of nodes with degree k.
std::vector<std::size_t> degree_histogram(const PopulationGraph& g);

struct RandomBaselines {
    double path_length;  // ln n / ln k_ave
    double clustering;   // k_ave / n
};

// Throws std::domain_error when k_ave <= 1.
RandomBaselines random_baselines(std::size_t n, double k_ave);

// Mean degree of the neighbours of i. Throws std::domain_error for an
// isolated node.
double nearest_neighbor_degree(const PopulationGraph& g, NodeId i);

struct LinearFit {
    double slope;
    double intercept;
};

// Ordinary least squares; nullopt when the x values have no spread.
std::optional<LinearFit> least_squares(std::span<const double> x, std::span<const double> y);

// Per-node (k_i, c_i) fit.
std::optional<LinearFit> clustering_degree_fit(const PopulationGraph& g);

// Fit of mean k_NN against k, one point per distinct degree. Nodes of
// degree 0 are skipped.
std::optional<LinearFit> knn_degree_fit(const PopulationGraph& g);

struct PoissonFit {
    double chi_square;
    std::size_t dof;
};

// Chi-square distance between a degree histogram and Poisson(k_ave) on the
// same number of nodes. The last bin absorbs the Poisson upper tail.
PoissonFit poisson_chi_square(std::span<const std::size_t> histogram, double k_ave);

struct TopologyReport {
    double path_length = 0.0;
    double k_ave = 0.0;
    std::vector<double> k_hist;  // mean count per degree
    double c_ave = 0.0;
    double c_rand = 0.0;
    double path_length_rand = 0.0;
    std::optional<LinearFit> ck_fit;
    std::optional<LinearFit> knn_fit;  // slope is v
    double poisson_chi_square = 0.0;
};

// Requires a connected graph with mean degree above 1.
TopologyReport analyze_topology(const PopulationGraph& g);

// Element-wise mean; fits are averaged over the reports that define them.
TopologyReport average_reports(std::span<const TopologyReport> reports);

struct TopologyStudyOptions {
    std::vector<std::size_t> pop_sizes{50, 100, 200};
    std::vector<int> k_max{3, 5, 7, 9};
    std::size_t runs = 10;
    std::size_t generations = 1000;
    std::size_t snapshot_every = 50;
    std::uint64_t seed = 1;
};

struct TopologyStudyCell {
    std::size_t pop_size = 0;
    int k_max = 0;
    std::size_t runs = 0;
    std::size_t snapshots = 0;  // total across runs
    TopologyReport mean;
};

// SOTEA runs capped by generation count; every snapshot is analysed and the
// reports averaged per (N, K_Max). Run r uses seed + r.
std::vector<TopologyStudyCell> sotea_topology_study(const ProblemSpec& problem,
                                                    const TopologyStudyOptions& options);

// Long format: pop_size,k_max,metric,value.
void write_study_csv(std::ostream& out, std::span<const TopologyStudyCell> cells);

}  // namespace sotea
