#include "sotea/growth.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sotea {

std::string to_string(GrowthModel m) {
    switch (m) {
        case GrowthModel::ba: return "ba";
        case GrowthModel::dd: return "dd";
        case GrowthModel::fitness: return "fitness";
    }
    return "?";
}

std::optional<GrowthModel> growth_model_from_string(const std::string& s) {
    for (auto m : {GrowthModel::ba, GrowthModel::dd, GrowthModel::fitness})
        if (to_string(m) == s) return m;
    return std::nullopt;
}

std::string to_string(FitnessDistribution d) {
    return d == FitnessDistribution::exponential ? "exponential" : "uniform";
}

std::optional<FitnessDistribution> fitness_distribution_from_string(const std::string& s) {
    if (s == "exponential") return FitnessDistribution::exponential;
    if (s == "uniform") return FitnessDistribution::uniform;
    return std::nullopt;
}

void GrowthConfig::validate() const {
    auto fail = [](const std::string& what) { throw std::invalid_argument("growth config: " + what); };
    switch (model) {
        case GrowthModel::ba:
            if (ba.m0 < 3) fail("m0 must be at least 3");
            if (ba.m < 1 || ba.m >= ba.m0) fail("need 1 <= m < m0");
            if (target_n <= ba.m0) fail("target_n must exceed m0");
            break;
        case GrowthModel::dd:
            if (!(dd.delta >= 0.0 && dd.delta <= 1.0)) fail("delta outside [0,1]");
            if (!(dd.alpha_coeff >= 0.0)) fail("alpha_coeff must be non-negative");
            if (dd.seed_size < 3) fail("seed_size must be at least 3");
            if (target_n < dd.seed_size) fail("target_n below seed size");
            break;
        case GrowthModel::fitness:
            if (fitness.n < 2) fail("n must be at least 2");
            if (!(fitness.x_max > 0.0) || !std::isfinite(fitness.x_max)) fail("x_max must be positive");
            break;
    }
}

std::vector<NodeId> preferential_targets(const PopulationGraph& g, std::size_t active, std::size_t m,
                                         Rng& rng) {
    if (m > active) throw std::invalid_argument("preferential_targets: m exceeds active nodes");
    // Each node appears once per incident stub; a uniform stub is a draw with
    // probability proportional to degree. Chosen nodes are rejected on redraw.
    std::vector<NodeId> stubs;
    for (NodeId i = 0; i < active; ++i) {
        if (g.degree(i) == 0) throw std::invalid_argument("preferential_targets: zero-degree node");
        for (NodeId j : g.neighbors(i))
            if (j < active) stubs.push_back(i);
    }
    std::vector<NodeId> chosen;
    while (chosen.size() < m) {
        NodeId t = stubs[uniform_index(rng, stubs.size())];
        if (std::find(chosen.begin(), chosen.end(), t) == chosen.end()) chosen.push_back(t);
    }
    return chosen;
}

PopulationGraph ba_grow(const BaParams& p, std::size_t target_n, Rng& rng) {
    GrowthConfig cfg;
    cfg.model = GrowthModel::ba;
    cfg.ba = p;
    cfg.target_n = target_n;
    cfg.validate();

    PopulationGraph g(target_n);
    std::vector<NodeId> stubs;
    for (NodeId i = 0; i < p.m0; ++i) {
        g.add_edge(i, (i + 1) % p.m0);
        stubs.push_back(i);
        stubs.push_back((i + 1) % p.m0);
    }
    std::vector<NodeId> chosen;
    for (NodeId v = p.m0; v < target_n; ++v) {
        chosen.clear();
        while (chosen.size() < p.m) {
            NodeId t = stubs[uniform_index(rng, stubs.size())];
            if (std::find(chosen.begin(), chosen.end(), t) == chosen.end()) chosen.push_back(t);
        }
        for (NodeId t : chosen) {
            g.add_edge(v, t);
            stubs.push_back(v);
            stubs.push_back(t);
        }
    }
    return g;
}

NodeId dd_step(PopulationGraph& g, std::size_t active, const DdParams& p, Rng& rng) {
    if (active == 0 || active >= g.size()) throw std::invalid_argument("dd_step: no room for the duplicate");
    const NodeId dup = active;
    const NodeId original = uniform_index(rng, active);
    const std::vector<NodeId> inherited = g.neighbors(original);
    for (NodeId j : inherited)
        if (j < active && !bernoulli(rng, p.delta)) g.add_edge(dup, j);
    const double alpha = p.alpha_coeff / static_cast<double>(active);
    if (alpha > 0.0) {
        for (NodeId j = 0; j < active; ++j)
            if (!g.has_edge(dup, j) && bernoulli(rng, alpha)) g.add_edge(dup, j);
    }
    return original;
}

PopulationGraph dd_grow(const DdParams& p, std::size_t target_n, Rng& rng) {
    GrowthConfig cfg;
    cfg.model = GrowthModel::dd;
    cfg.dd = p;
    cfg.target_n = target_n;
    cfg.validate();

    PopulationGraph g(target_n);
    for (NodeId i = 0; i < p.seed_size; ++i) g.add_edge(i, (i + 1) % p.seed_size);
    for (std::size_t active = p.seed_size; active < target_n; ++active) dd_step(g, active, p, rng);
    return g;
}

double fitness_link_probability(double xi, double xj, double x_max) {
    return std::clamp(xi * xj / (x_max * x_max), 0.0, 1.0);
}

double draw_intrinsic_fitness(const FitnessParams& p, Rng& rng) {
    if (p.rho == FitnessDistribution::uniform) return uniform_real(rng, 0.0, p.x_max);
    // Inverse CDF of the exponential conditioned on x <= x_max.
    const double mass = -std::expm1(-p.x_max);
    return -std::log1p(-uniform01(rng) * mass);
}

PopulationGraph fitness_model_from_values(std::span<const double> x, double x_max, Rng& rng) {
    if (x.size() < 2) throw std::invalid_argument("fitness model needs at least two nodes");
    if (!(x_max > 0.0)) throw std::invalid_argument("fitness model needs x_max > 0");
    PopulationGraph g(x.size());
    for (NodeId i = 0; i < x.size(); ++i)
        for (NodeId j = i + 1; j < x.size(); ++j)
            if (bernoulli(rng, fitness_link_probability(x[i], x[j], x_max))) g.add_edge(i, j);
    return g;
}

PopulationGraph fitness_model_generate(const FitnessParams& p, Rng& rng) {
    GrowthConfig cfg;
    cfg.model = GrowthModel::fitness;
    cfg.fitness = p;
    cfg.validate();
    std::vector<double> x(p.n);
    for (auto& v : x) v = draw_intrinsic_fitness(p, rng);
    return fitness_model_from_values(x, p.x_max, rng);
}

PopulationGraph generate(const GrowthConfig& cfg, Rng& rng) {
    cfg.validate();
    switch (cfg.model) {
        case GrowthModel::ba: return ba_grow(cfg.ba, cfg.target_n, rng);
        case GrowthModel::dd: return dd_grow(cfg.dd, cfg.target_n, rng);
        case GrowthModel::fitness: return fitness_model_generate(cfg.fitness, rng);
    }
    throw std::logic_error("unknown growth model");
}

std::optional<TailFit> degree_tail_exponent(const PopulationGraph& g, std::size_t k_min) {
    if (k_min == 0) throw std::invalid_argument("degree_tail_exponent: k_min must be positive");
    std::vector<std::size_t> counts;
    for (NodeId i = 0; i < g.size(); ++i) {
        std::size_t k = g.degree(i);
        if (k < k_min) continue;
        std::size_t bin = 0;
        while (k >= (k_min << (bin + 1))) ++bin;
        if (counts.size() <= bin) counts.resize(bin + 1, 0);
        ++counts[bin];
    }
    std::vector<double> lx, ly;
    const double n = static_cast<double>(g.size());
    for (std::size_t b = 0; b < counts.size(); ++b) {
        if (counts[b] == 0) continue;
        const double lo = static_cast<double>(k_min << b);
        const double width = lo;  // [lo, 2 lo)
        lx.push_back(std::log(std::sqrt(lo * (2.0 * lo - 1.0))));
        ly.push_back(std::log(static_cast<double>(counts[b]) / (n * width)));
    }
    if (lx.size() < 3) return std::nullopt;
    auto fit = least_squares(lx, ly);
    if (!fit) return std::nullopt;
    return TailFit{-fit->slope, lx.size()};
}

}  // namespace sotea
