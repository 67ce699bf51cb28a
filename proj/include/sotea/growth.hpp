#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sotea/graph.hpp"
#include "sotea/metrics.hpp"
#include "sotea/random.hpp"

namespace sotea {

// Reference network generators used as baselines for evolved topologies.

enum class GrowthModel { ba, dd, fitness };
enum class FitnessDistribution { exponential, uniform };

std::string to_string(GrowthModel m);
std::optional<GrowthModel> growth_model_from_string(const std::string& s);
std::string to_string(FitnessDistribution d);
std::optional<FitnessDistribution> fitness_distribution_from_string(const std::string& s);

struct BaParams {
    std::size_t m0 = 3;  // seed ring size
    std::size_t m = 2;   // links per arrival, m < m0
};

struct DdParams {
    double delta = 0.53;        // loss probability per inherited link
    double alpha_coeff = 0.06;  // new-link probability is alpha_coeff / N
    std::size_t seed_size = 5;  // seed ring
};

struct FitnessParams {
    std::size_t n = 1000;
    FitnessDistribution rho = FitnessDistribution::exponential;
    double x_max = 10.0;  // truncation point and the normaliser x_M
};

struct GrowthConfig {
    GrowthModel model = GrowthModel::ba;
    std::size_t target_n = 1000;  // ba and dd
    BaParams ba;
    DdParams dd;
    FitnessParams fitness;

    // Throws std::invalid_argument on out-of-range parameters.
    void validate() const;
};

// m distinct targets among nodes [0, active), each draw with probability
// k_i / sum k over the not yet chosen nodes. Every active node needs k > 0.
std::vector<NodeId> preferential_targets(const PopulationGraph& g, std::size_t active, std::size_t m, Rng& rng);

// Ring of m0 nodes, then one node at a time with m preferential links.
// Edge count is m0 + m (target_n - m0).
PopulationGraph ba_grow(const BaParams& p, std::size_t target_n, Rng& rng);

// One duplication step on nodes [0, active): copies a uniform node into
// node `active`, drops each inherited link with probability delta, then links
// the copy to every other active node with probability alpha_coeff / active.
// Returns the duplicated (original) node. Requires g.size() > active > 0.
NodeId dd_step(PopulationGraph& g, std::size_t active, const DdParams& p, Rng& rng);

// Seed ring of seed_size nodes grown by dd_step. May be disconnected.
PopulationGraph dd_grow(const DdParams& p, std::size_t target_n, Rng& rng);

// x_i * x_j / x_M^2.
double fitness_link_probability(double xi, double xj, double x_max);

// Draw from rho: exponential(rate 1) truncated to [0, x_max], or U(0, x_max).
double draw_intrinsic_fitness(const FitnessParams& p, Rng& rng);

// Every unordered pair linked independently with fitness_link_probability.
PopulationGraph fitness_model_from_values(std::span<const double> x, double x_max, Rng& rng);
PopulationGraph fitness_model_generate(const FitnessParams& p, Rng& rng);

PopulationGraph generate(const GrowthConfig& cfg, Rng& rng);

struct TailFit {
    double gamma;        // p(k) ~ k^-gamma
    std::size_t points;  // occupied log bins used
};

// Least squares of log p(k) against log k on logarithmic bins (edges
// k_min * 2^j, density divided by bin width). nullopt with fewer than three
// occupied bins.
std::optional<TailFit> degree_tail_exponent(const PopulationGraph& g, std::size_t k_min);

}  // namespace sotea
