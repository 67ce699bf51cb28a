#include <algorithm>
#include <limits>

#include "engine_common.hpp"

namespace sotea {

namespace {

constexpr int kParentRedraws = 10;

// Two distinct uniform members of a population of size n.
std::pair<std::size_t, std::size_t> uniform_pair(std::size_t n, Rng& rng) {
    std::size_t a = uniform_index(rng, n);
    std::size_t b = uniform_index(rng, n - 1);
    if (b >= a) ++b;
    return {a, b};
}

// Offspring of pop[a] x pop[b]; `pop` is best first, so the lower index is
// the better parent.
Individual breed(const std::vector<Individual>& pop, std::size_t a, std::size_t b,
                 OperatorSet ops, detail::Evaluator& ev, Rng& rng) {
    const VariableDomain domain = VariableDomain::of(ev.problem());
    Operator op = pick_operator(ops, rng);
    ParentSet parents;
    parents.primary = pop[a].genome;
    parents.mate = pop[b].genome;
    parents.primary_is_better = a < b;
    if (op == Operator::differential_evolution) parents.donor = pop[uniform_index(rng, pop.size())].genome;
    return ev.make(create_offspring(op, parents, domain, rng));
}

// Picks `count` survivors from a pool; `local` holds the pool's 1-based
// ranks. Tournaments run without replacement: a winner leaves the pool.
std::vector<std::size_t> survivors(SelectionScheme scheme, const std::vector<int>& local,
                                   std::size_t count, Rng& rng) {
    if (scheme == SelectionScheme::truncation) return select(scheme, local, count, rng);
    std::vector<std::size_t> remaining(local.size());
    for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
    std::vector<std::size_t> chosen;
    while (chosen.size() < count && !remaining.empty()) {
        std::size_t pick = 0;
        if (remaining.size() > 1) {
            auto [a, b] = uniform_pair(remaining.size(), rng);
            pick = local[remaining[a]] < local[remaining[b]] ? a : b;
        }
        chosen.push_back(remaining[pick]);
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return chosen;
}

// Ranks `pool`, keeps `count` members by `scheme` and returns them best first.
std::vector<Individual> reduce(std::vector<Individual> pool, std::size_t count,
                               SelectionScheme scheme, const FitnessComparator& cmp, Rng& rng) {
    const auto fit = detail::fitness_of(pool);
    const RankTable ranks = assign_ranks(fit, cmp, rng);
    std::vector<std::size_t> keep = survivors(scheme, ranks.ranks(), count, rng);
    std::sort(keep.begin(), keep.end(),
              [&](std::size_t a, std::size_t b) { return ranks.rank(a) < ranks.rank(b); });
    std::vector<Individual> out;
    out.reserve(keep.size());
    for (std::size_t i : keep) out.push_back(std::move(pool[i]));
    return out;
}

}  // namespace

RunRecord run_pea_es(const EngineConfig& cfg, const ProblemSpec& problem, Rng& rng) {
    RunRecord rec = detail::start_record(cfg, problem);
    if (cfg.family != Family::pea_es) throw std::invalid_argument("run_pea_es: wrong family");
    const FitnessComparator cmp = detail::comparator_for(problem);
    const SelectionScheme scheme = cfg.pea->selection;
    const bool generational = cfg.pea->update == PopulationUpdate::generational;
    detail::Evaluator ev(problem, cfg.max_evals);

    // N = lambda = 2 mu, kappa = 1 (best parent exempt) or N = lambda = mu, kappa = inf.
    const std::size_t lambda = cfg.pop_size;
    const std::size_t mu = generational ? cfg.pop_size / 2 : cfg.pop_size;
    const int kappa = generational ? 1 : std::numeric_limits<int>::max();

    // The random initial population is treated as the first offspring pool.
    std::vector<Individual> parents =
        reduce(detail::initial_population(lambda, ev, rng), mu, scheme, cmp, rng);
    detail::record_generation(rec, 0, ev);

    for (std::size_t gen = 1; detail::keep_going(cfg, gen, ev); ++gen) {
        std::vector<Individual> pool;
        pool.reserve(lambda + mu);
        for (std::size_t i = 0; i < lambda && !ev.exhausted(); ++i) {
            auto [a, b] = uniform_pair(parents.size(), rng);
            pool.push_back(breed(parents, a, b, cfg.operators, ev, rng));
        }
        for (std::size_t i = 0; i < parents.size(); ++i) {
            Individual& p = parents[i];
            if (p.age < kappa) ++p.age;
            if (p.age < kappa || i == 0) pool.push_back(p);
        }
        // A budget cut can leave the pool short of mu; refill from the parents.
        for (std::size_t i = 1; pool.size() < mu && i < parents.size(); ++i) {
            if (parents[i].age >= kappa) pool.push_back(parents[i]);
        }
        parents = reduce(std::move(pool), mu, scheme, cmp, rng);
        detail::record_generation(rec, gen, ev);
    }
    detail::finish_record(rec, ev);
    return rec;
}

RunRecord run_pea_ga(const EngineConfig& cfg, const ProblemSpec& problem, Rng& rng) {
    RunRecord rec = detail::start_record(cfg, problem);
    if (cfg.family != Family::pea_ga) throw std::invalid_argument("run_pea_ga: wrong family");
    const FitnessComparator cmp = detail::comparator_for(problem);
    const SelectionScheme scheme = cfg.pea->selection;
    const std::size_t n = cfg.pop_size;
    detail::Evaluator ev(problem, cfg.max_evals);

    std::vector<Individual> pop = detail::initial_population(n, ev, rng);
    {
        const auto fit = detail::fitness_of(pop);
        std::vector<std::size_t> order = rank_order(fit, cmp, rng);
        std::vector<Individual> sorted;
        for (std::size_t i : order) sorted.push_back(std::move(pop[i]));
        pop = std::move(sorted);
    }
    detail::record_generation(rec, 0, ev);
    const std::vector<int> local = sequential_ranks(n);

    // True when `below` should move ahead of `above` in the ranked population.
    auto moves_up = [&](const Individual& below, const Individual& above) {
        if (!cmp.stochastic) return below.fitness.cost < above.fitness.cost;
        const Fitness pair[2] = {above.fitness, below.fitness};
        return stochastic_rank_sort(pair, cmp.p_f, rng, 1).front() == 1;
    };

    std::size_t gen = 1;
    while (detail::keep_going(cfg, gen, ev)) {
        std::vector<std::size_t> pick = select(scheme, local, 2, rng);
        for (int r = 0; r < kParentRedraws && pick[1] == pick[0]; ++r) {
            pick[1] = select(scheme, local, 1, rng).front();
        }
        Individual child = breed(pop, pick[0], pick[1], cfg.operators, ev, rng);

        // Replace the worst member if the offspring beats it, then let the
        // newcomer climb to its place in the ranking.
        if (challenger_wins(child.fitness, pop.back().fitness, cmp, rng)) {
            pop.back() = std::move(child);
            for (std::size_t j = n - 1; j > 0 && moves_up(pop[j], pop[j - 1]); --j) {
                std::swap(pop[j], pop[j - 1]);
            }
        }
        if (ev.used() % n == 0) {
            detail::record_generation(rec, gen, ev);
            ++gen;
        }
    }
    if (rec.trace.back().evals != ev.used()) detail::record_generation(rec, gen, ev);
    detail::finish_record(rec, ev);
    return rec;
}

}  // namespace sotea
