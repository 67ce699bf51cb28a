#pragma once

#include <optional>
#include <vector>

#include "sotea/engines.hpp"

namespace sotea::detail {

// Budgeted evaluation with best-so-far tracking.
class Evaluator {
public:
    Evaluator(const ProblemSpec& problem, std::size_t max_evals)
        : problem_(problem), max_evals_(max_evals) {}

    std::size_t used() const { return used_; }
    std::size_t remaining() const { return max_evals_ - used_; }
    bool exhausted() const { return used_ >= max_evals_; }

    // Throws std::overflow_error on a non-finite objective and
    // std::logic_error when the budget is spent.
    Individual make(Genome genome);

    const Individual& best() const { return *best_; }

    const ProblemSpec& problem() const { return problem_; }

private:
    const ProblemSpec& problem_;
    std::size_t max_evals_;
    std::size_t used_ = 0;
    std::optional<Individual> best_;
};

FitnessComparator comparator_for(const ProblemSpec& problem);

std::vector<Fitness> fitness_of(const std::vector<Individual>& pop);

// Starts a record with the identifying fields filled in.
RunRecord start_record(const EngineConfig& cfg, const ProblemSpec& problem);

void record_generation(RunRecord& rec, std::size_t generation, const Evaluator& ev);

void finish_record(RunRecord& rec, const Evaluator& ev);

// True while another generation may start.
bool keep_going(const EngineConfig& cfg, std::size_t next_generation, const Evaluator& ev);

std::vector<Individual> initial_population(std::size_t size, Evaluator& ev, Rng& rng);

}  // namespace sotea::detail
