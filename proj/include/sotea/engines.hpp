#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sotea/graph.hpp"
#include "sotea/problems.hpp"
#include "sotea/random.hpp"
#include "sotea/selection.hpp"
#include "sotea/variation.hpp"

namespace sotea {

enum class Family { sotea, cga, pea_es, pea_ga };
enum class PopulationUpdate { generational, pseudo_steady_state };

std::string_view to_string(Family f);
std::optional<Family> family_from_string(std::string_view name);
std::string_view to_string(PopulationUpdate u);
std::optional<PopulationUpdate> update_from_string(std::string_view name);

// Design class used in the comparative reports.
enum class DesignClass { pea, cga, sotea };
std::string_view to_string(DesignClass c);
DesignClass design_class(Family f);

struct SoteaParams {
    int k_max = 7;
};

struct CgaParams {
    std::size_t radius = 1;
};

struct PeaParams {
    PopulationUpdate update = PopulationUpdate::generational;  // ignored by the GA family
    SelectionScheme selection = SelectionScheme::binary_tournament;
};

inline constexpr std::size_t kDefaultPopulation = 50;
inline constexpr std::size_t kDefaultMaxEvals = 150000;
inline constexpr std::size_t kSnapshotEvery = 50;

struct EngineConfig {
    Family family = Family::sotea;
    std::string label;
    std::size_t pop_size = kDefaultPopulation;
    std::size_t max_evals = kDefaultMaxEvals;
    std::optional<std::size_t> max_generations;
    std::uint64_t seed = 1;
    OperatorSet operators = OperatorSet::seven;
    std::size_t snapshot_every = kSnapshotEvery;  // 0 disables topology snapshots

    std::optional<SoteaParams> sotea;
    std::optional<CgaParams> cga;
    std::optional<PeaParams> pea;

    // Throws std::invalid_argument describing the first problem found.
    void validate() const;
};

struct Individual {
    Genome genome;
    Evaluation eval;
    Fitness fitness;
    int age = 0;
};

struct GenerationRow {
    std::size_t generation = 0;
    std::size_t evals = 0;
    double best = 0.0;      // best-so-far objective, in the problem's own sense
    bool feasible = false;  // best-so-far feasibility (reporting slack)
};

struct TopologySnapshot {
    std::size_t generation;
    PopulationGraph graph;
};

struct RunRecord {
    std::string problem;
    std::string label;
    Family family = Family::sotea;
    std::uint64_t seed = 0;
    std::vector<GenerationRow> trace;
    std::vector<TopologySnapshot> snapshots;
    Individual best;
    std::size_t evals = 0;
    std::vector<std::string> notes;
};

// Orders individuals for best-so-far reporting: feasible (within slack)
// before infeasible, then cost, then penalty.
bool better_for_report(const Individual& a, const Individual& b, const ProblemSpec& p);

RunRecord run_sotea(const EngineConfig& cfg, const ProblemSpec& problem, Rng& rng);
RunRecord run_cga(const EngineConfig& cfg, const ProblemSpec& problem, Rng& rng);
RunRecord run_pea_es(const EngineConfig& cfg, const ProblemSpec& problem, Rng& rng);
RunRecord run_pea_ga(const EngineConfig& cfg, const ProblemSpec& problem, Rng& rng);

// Dispatches on cfg.family.
RunRecord run_engine(const EngineConfig& cfg, const ProblemSpec& problem, Rng& rng);
// Seeds a fresh stream from cfg.seed.
RunRecord run_engine(const EngineConfig& cfg, const ProblemSpec& problem);

// Ring nodes within distance `radius` of `center`, excluding it.
std::vector<NodeId> ring_neighborhood(std::size_t n, NodeId center, std::size_t radius);

inline constexpr std::array<int, 4> kSoteaKMaxSweep{3, 5, 7, 9};
inline constexpr std::array<std::size_t, 5> kCgaRadiusSweep{1, 2, 4, 8, 12};

// 8 ES + 4 GA + cGA radius sweep + SOTEA K_Max sweep, with the given budget.
std::vector<EngineConfig> design_matrix(std::size_t pop_size = kDefaultPopulation,
                                        std::size_t max_evals = kDefaultMaxEvals);

}  // namespace sotea
