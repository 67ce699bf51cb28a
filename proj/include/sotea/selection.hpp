#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "sotea/random.hpp"
#include "sotea/topology.hpp"

namespace sotea {

// What the comparator sees of an individual: minimisation cost and summed
// constraint violation.
struct Fitness {
    double cost = 0.0;
    double penalty = 0.0;
};

inline constexpr double kStochasticRankingPf = 0.45;

// Unconstrained mode sorts by cost; stochastic ranking applies when
// the problem has constraints.
struct FitnessComparator {
    bool stochastic = false;
    double p_f = kStochasticRankingPf;

    static FitnessComparator unconstrained() { return {false, kStochasticRankingPf}; }
    static FitnessComparator stochastic_ranking(double p_f = kStochasticRankingPf);
};

// Stochastic ranking bubble sort: up to `sweeps` passes (default pool size),
// stopping on a pass without swaps. The input order is the starting order;
// returns indices into `pool`, best first.
std::vector<std::size_t> stochastic_rank_sort(std::span<const Fitness> pool, double p_f, Rng& rng,
                                              std::optional<std::size_t> sweeps = std::nullopt);

// Best-first order of `pool` under the comparator. Unconstrained mode is a
// stable sort on cost (lower index wins ties) and consumes no randomness.
std::vector<std::size_t> rank_order(std::span<const Fitness> pool, const FitnessComparator& cmp,
                                    Rng& rng);

RankTable assign_ranks(std::span<const Fitness> pool, const FitnessComparator& cmp, Rng& rng);

// Survivor choice between an incumbent and a challenger. Identical fitness
// favours the challenger; otherwise the pair is ranked with the incumbent
// listed first.
bool challenger_wins(const Fitness& challenger, const Fitness& incumbent,
                     const FitnessComparator& cmp, Rng& rng);

enum class SelectionScheme { binary_tournament, truncation, linear_ranking, uniform_random };

std::string_view to_string(SelectionScheme s);
std::optional<SelectionScheme> selection_from_string(std::string_view name);

// Selects `count` members of a pool whose members are identified by their
// best-first position: `local_rank[i]` is the 1-based rank of pool member i.
// Returns pool indices.
//   tournament: each pick is the better of two distinct uniform draws
//   truncation: the `count` best, best first (count <= pool size)
//   linear_ranking: weight pool_size - rank + 1
//   uniform_random: uniform draws
std::vector<std::size_t> select(SelectionScheme scheme, std::span<const int> local_rank,
                                std::size_t count, Rng& rng);

// Convenience: local ranks 1..n for a pool already in best-first order.
std::vector<int> sequential_ranks(std::size_t n);

}  // namespace sotea
